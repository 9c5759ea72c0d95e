#include "rkstab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rkstab/error.hpp"

namespace rkstab {

std::vector<double> Matrix::multiply(const std::vector<double>& x) const {
  require(static_cast<int>(x.size()) == cols_, "matrix-vector size mismatch");
  std::vector<double> y(static_cast<size_t>(rows_), 0.0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[static_cast<size_t>(i)] += (*this)(i, j) * x[static_cast<size_t>(j)];
  return y;
}

AffineSolution solve_underdetermined(const Matrix& a, const std::vector<double>& b) {
  const int k = a.rows();
  const int n = a.cols();
  require(k <= n, "solve_underdetermined: more equations than unknowns");
  require(static_cast<int>(b.size()) == k, "solve_underdetermined: rhs size mismatch");

  // Q R = A^T with Q accumulated explicitly (n x n); n is at most a few dozen.
  Matrix r(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) r(i, j) = a(j, i);
  Matrix q(n, n);
  for (int i = 0; i < n; ++i) q(i, i) = 1.0;

  for (int j = 0; j < k; ++j) {
    double norm = 0.0;
    for (int i = j; i < n; ++i) norm += r(i, j) * r(i, j);
    norm = std::sqrt(norm);
    if (norm == 0.0) fail(ErrorCode::Degenerate, "equality constraints are rank deficient");
    const double alpha = r(j, j) > 0 ? -norm : norm;
    std::vector<double> v(static_cast<size_t>(n), 0.0);
    for (int i = j; i < n; ++i) v[static_cast<size_t>(i)] = r(i, j);
    v[static_cast<size_t>(j)] -= alpha;
    double vv = 0.0;
    for (int i = j; i < n; ++i) vv += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    if (vv == 0.0) continue;
    for (int c = j; c < k; ++c) {
      double s = 0.0;
      for (int i = j; i < n; ++i) s += v[static_cast<size_t>(i)] * r(i, c);
      s *= 2.0 / vv;
      for (int i = j; i < n; ++i) r(i, c) -= s * v[static_cast<size_t>(i)];
    }
    // Q <- Q H
    for (int row = 0; row < n; ++row) {
      double s = 0.0;
      for (int i = j; i < n; ++i) s += q(row, i) * v[static_cast<size_t>(i)];
      s *= 2.0 / vv;
      for (int i = j; i < n; ++i) q(row, i) -= s * v[static_cast<size_t>(i)];
    }
  }

  double rmax = 0.0;
  for (int j = 0; j < k; ++j) rmax = std::max(rmax, std::abs(r(j, j)));
  for (int j = 0; j < k; ++j)
    if (std::abs(r(j, j)) <= 1e-14 * rmax)
      fail(ErrorCode::Degenerate, "equality constraints are rank deficient");

  // A x = b with A = R^T Q1^T: solve R^T w = b, x = Q1 w.
  std::vector<double> w(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    double s = b[static_cast<size_t>(i)];
    for (int j = 0; j < i; ++j) s -= r(j, i) * w[static_cast<size_t>(j)];
    w[static_cast<size_t>(i)] = s / r(i, i);
  }
  AffineSolution out;
  out.particular.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) out.particular[static_cast<size_t>(i)] += q(i, j) * w[static_cast<size_t>(j)];
  out.nullspace = Matrix(n, n - k);
  for (int i = 0; i < n; ++i)
    for (int j = k; j < n; ++j) out.nullspace(i, j - k) = q(i, j);
  return out;
}

bool cholesky_solve(const Matrix& h, const std::vector<double>& g, std::vector<double>& x) {
  const int n = h.rows();
  Matrix l(n, n);
  for (int j = 0; j < n; ++j) {
    double s = h(j, j);
    for (int c = 0; c < j; ++c) s -= l(j, c) * l(j, c);
    if (!(s > 0.0)) return false;
    l(j, j) = std::sqrt(s);
    for (int i = j + 1; i < n; ++i) {
      double t = h(i, j);
      for (int c = 0; c < j; ++c) t -= l(i, c) * l(j, c);
      l(i, j) = t / l(j, j);
    }
  }
  x.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double s = g[static_cast<size_t>(i)];
    for (int c = 0; c < i; ++c) s -= l(i, c) * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(i)] = s / l(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[static_cast<size_t>(i)];
    for (int c = i + 1; c < n; ++c) s -= l(c, i) * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(i)] = s / l(i, i);
  }
  return true;
}

TridiagEigen tridiagonal_eigen(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  require(n >= 1, "tridiagonal_eigen: empty matrix");
  require(static_cast<int>(e.size()) == n - 1, "tridiagonal_eigen: off-diagonal size mismatch");
  e.push_back(0.0);

  double tnorm = 0.0;
  for (int i = 0; i < n; ++i)
    tnorm = std::max(tnorm, std::abs(d[static_cast<size_t>(i)]) + std::abs(e[static_cast<size_t>(i)]) +
                                (i > 0 ? std::abs(e[static_cast<size_t>(i - 1)]) : 0.0));
  const double tol = 1e-14 * tnorm;

  // Only the first row of the eigenvector matrix is needed (Golub-Welsch).
  std::vector<double> z(static_cast<size_t>(n), 0.0);
  z[0] = 1.0;

  auto D = [&](int i) -> double& { return d[static_cast<size_t>(i)]; };
  auto E = [&](int i) -> double& { return e[static_cast<size_t>(i)]; };
  auto Z = [&](int i) -> double& { return z[static_cast<size_t>(i)]; };

  for (int l = 0; l < n; ++l) {
    int sweeps = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m)
        if (std::abs(E(m)) <= tol) break;
      if (m == l) break;
      if (++sweeps > 50) fail(ErrorCode::Degenerate, "tridiagonal QL did not converge in 50 sweeps");
      double g = (D(l + 1) - D(l)) / (2.0 * E(l));
      double r = std::hypot(g, 1.0);
      g = D(m) - D(l) + E(l) / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * E(i);
        const double b = c * E(i);
        r = std::hypot(f, g);
        E(i + 1) = r;
        if (r == 0.0) {
          D(i + 1) -= p;
          E(m) = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = D(i + 1) - p;
        r = (D(i) - g) * s + 2.0 * c * b;
        p = s * r;
        D(i + 1) = g + p;
        g = c * r - b;
        f = Z(i + 1);
        Z(i + 1) = s * Z(i) + c * f;
        Z(i) = c * Z(i) - s * f;
      }
      if (r == 0.0 && i >= l) continue;
      D(l) -= p;
      E(l) = g;
      E(m) = 0.0;
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return D(a) < D(b); });
  TridiagEigen out;
  for (int i : order) {
    out.values.push_back(D(i));
    out.first_components.push_back(Z(i));
  }
  return out;
}

}  // namespace rkstab

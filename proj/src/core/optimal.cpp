#include "rkstab/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rkstab/bounds.hpp"
#include "rkstab/error.hpp"
#include "rkstab/linalg.hpp"
#include "rkstab/simplex.hpp"

namespace rkstab {

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::Disc: return "disc";
    case Geometry::Segment: return "segment";
    case Geometry::Threshold: return "threshold";
  }
  return "unknown";
}

Geometry geometry_from_string(const std::string& s) {
  if (s == "disc") return Geometry::Disc;
  if (s == "segment") return Geometry::Segment;
  if (s == "threshold" || s == "abs_monotone") return Geometry::Threshold;
  fail(ErrorCode::InvalidArgument, "unknown geometry '" + s + "'");
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kExchangeRounds = 20;

// Order conditions P^(j)(0) = 1, j = 0..n, as rows over the basis
// coefficients, each row scaled to unit max norm.
struct Equalities {
  Matrix a;
  std::vector<double> b;
};

Equalities normalize(Matrix a) {
  Equalities eq{std::move(a), {}};
  eq.b.assign(static_cast<size_t>(eq.a.rows()), 1.0);
  for (int j = 0; j < eq.a.rows(); ++j) {
    double mx = 0.0;
    for (int k = 0; k < eq.a.cols(); ++k) mx = std::max(mx, std::abs(eq.a(j, k)));
    for (int k = 0; k < eq.a.cols(); ++k) eq.a(j, k) /= mx;
    eq.b[static_cast<size_t>(j)] /= mx;
  }
  return eq;
}

// d^j/dz^j (1 + z/r)^k at 0 = k!/(k-j)! / r^j.
Equalities w_basis_equalities(int m, int n, double r) {
  Matrix a(n + 1, m + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = j; k <= m; ++k) {
      double v = 1.0;
      for (int i = 0; i < j; ++i) v *= (k - i) / r;
      a(j, k) = v;
    }
  return normalize(std::move(a));
}

// d^j/dx^j T_k(1 + 2x/r) at 0 = (2/r)^j prod_{i<j} (k^2 - i^2)/(2i + 1).
Equalities chebyshev_equalities(int m, int n, double r) {
  Matrix a(n + 1, m + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= m; ++k) {
      double v = 1.0;
      for (int i = 0; i < j; ++i) v *= (2.0 / r) * (static_cast<double>(k) * k - static_cast<double>(i) * i) / (2 * i + 1);
      a(j, k) = v;
    }
  return normalize(std::move(a));
}

std::vector<double> affine_combine(const AffineSolution& sol, const std::vector<double>& y) {
  std::vector<double> c = sol.particular;
  for (int i = 0; i < sol.nullspace.rows(); ++i)
    for (int l = 0; l < sol.nullspace.cols(); ++l)
      c[static_cast<size_t>(i)] += sol.nullspace(i, l) * y[static_cast<size_t>(l)];
  return c;
}

Poly from_w_basis(const std::vector<double>& c, double r) {
  return Poly(c).compose_affine(1.0, 1.0 / r);
}

Poly from_chebyshev_basis(const std::vector<double>& c, double r) {
  Poly acc;
  Poly prev = Poly::constant(1.0), cur = Poly::linear(0.0, 1.0);
  for (size_t k = 0; k < c.size(); ++k) {
    if (k == 0) {
      acc += c[0] * prev;
      continue;
    }
    if (k > 1) {
      Poly next = 2.0 * (Poly::linear(0.0, 1.0) * cur) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    acc += c[k] * cur;
  }
  return acc.compose_affine(1.0, 2.0 / r).with_degree_bound(static_cast<int>(c.size()) - 1);
}

// T_0..T_m at u.
std::vector<double> chebyshev_values(int m, double u) {
  std::vector<double> t(static_cast<size_t>(m) + 1);
  t[0] = 1.0;
  if (m >= 1) t[1] = u;
  for (int k = 2; k <= m; ++k) t[static_cast<size_t>(k)] = 2.0 * u * t[static_cast<size_t>(k - 1)] - t[static_cast<size_t>(k - 2)];
  return t;
}

Complex w_eval(const std::vector<double>& c, double phi) {
  Complex acc = 0.0;
  const Complex w = std::polar(1.0, phi);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
  return acc;
}

// Indices of local maxima of v (plateaus count once), restricted to v > floor.
std::vector<size_t> local_maxima(const std::vector<double>& v, double floor) {
  std::vector<size_t> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= floor) continue;
    const bool left = i == 0 || v[i] >= v[i - 1];
    const bool right = i + 1 == v.size() || v[i] > v[i + 1];
    if (left && right) out.push_back(i);
  }
  return out;
}

// Interior local maxima of f over a grid, each refined by golden-section
// search between its grid neighbours. Returns (abscissa, value) pairs.
template <class F>
std::vector<std::pair<double, double>> refined_peaks(const std::vector<double>& grid,
                                                     const std::vector<double>& vals, double floor, F f) {
  constexpr double kGold = 0.6180339887498949;
  std::vector<std::pair<double, double>> out;
  for (size_t i : local_maxima(vals, floor)) {
    if (i == 0 || i + 1 == grid.size()) continue;
    double a = grid[i - 1], b = grid[i + 1];
    double x1 = b - kGold * (b - a), x2 = a + kGold * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGold * (b - a);
        f2 = f(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGold * (b - a);
        f1 = f(x1);
      }
    }
    const double x = f1 > f2 ? x1 : x2;
    const double v = std::max({f1, f2, vals[i]});
    out.emplace_back(v == vals[i] ? grid[i] : x, v);
  }
  return out;
}

// ---------------------------------------------------------------- disc ----

struct DiscSamples {
  std::vector<Complex> a;                 // value of the particular solution
  std::vector<std::vector<Complex>> b;    // nullspace columns
};

DiscSamples disc_samples(const AffineSolution& sol, const std::vector<double>& phis) {
  DiscSamples s;
  const int m = sol.nullspace.rows() - 1;
  const int d = sol.nullspace.cols();
  for (double phi : phis) {
    std::vector<Complex> wk(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) wk[static_cast<size_t>(k)] = std::polar(1.0, k * phi);
    Complex a = 0.0;
    std::vector<Complex> b(static_cast<size_t>(d), 0.0);
    for (int k = 0; k <= m; ++k) {
      a += sol.particular[static_cast<size_t>(k)] * wk[static_cast<size_t>(k)];
      for (int l = 0; l < d; ++l) b[static_cast<size_t>(l)] += sol.nullspace(k, l) * wk[static_cast<size_t>(k)];
    }
    s.a.push_back(a);
    s.b.push_back(std::move(b));
  }
  return s;
}

// minimize max_j |a_j + B_j y|^2 through the barrier
// tau s - sum_j log(s - |w_j|^2), tau increased tenfold per round.
std::vector<double> disc_minimax(const DiscSamples& smp, int d, double gap) {
  const size_t K = smp.a.size();
  std::vector<double> y(static_cast<size_t>(d), 0.0);
  if (d == 0) return y;
  auto values = [&](const std::vector<double>& yy, std::vector<Complex>& w) {
    w.resize(K);
    for (size_t j = 0; j < K; ++j) {
      Complex v = smp.a[j];
      for (int l = 0; l < d; ++l) v += smp.b[j][static_cast<size_t>(l)] * yy[static_cast<size_t>(l)];
      w[j] = v;
    }
  };
  std::vector<Complex> w;
  values(y, w);
  double peak = 0.0;
  for (const auto& v : w) peak = std::max(peak, std::norm(v));
  double s = 1.1 * peak + 1e-3;
  double tau = 1.0;
  const int nv = d + 1;

  for (int outer = 0; outer < 40; ++outer) {
    for (int it = 0; it < 100; ++it) {
      values(y, w);
      std::vector<double> grad(static_cast<size_t>(nv), 0.0);
      grad[static_cast<size_t>(d)] = tau;
      Matrix h(nv, nv);
      double f0 = tau * s;
      for (size_t j = 0; j < K; ++j) {
        const double g = s - std::norm(w[j]);
        f0 -= std::log(g);
        std::vector<double> jac(static_cast<size_t>(nv));
        for (int l = 0; l < d; ++l)
          jac[static_cast<size_t>(l)] = -2.0 * (std::conj(w[j]) * smp.b[j][static_cast<size_t>(l)]).real();
        jac[static_cast<size_t>(d)] = 1.0;
        for (int p = 0; p < nv; ++p) {
          grad[static_cast<size_t>(p)] -= jac[static_cast<size_t>(p)] / g;
          for (int q = 0; q < nv; ++q) h(p, q) += jac[static_cast<size_t>(p)] * jac[static_cast<size_t>(q)] / (g * g);
        }
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            h(p, q) += 2.0 * (std::conj(smp.b[j][static_cast<size_t>(p)]) * smp.b[j][static_cast<size_t>(q)]).real() / g;
      }
      std::vector<double> neg(grad.size()), dx;
      for (size_t i = 0; i < grad.size(); ++i) neg[i] = -grad[i];
      // Late barrier rounds make H badly scaled; load the diagonal slightly
      // when rounding breaks the factorization.
      double diag = 0.0;
      for (int p = 0; p < nv; ++p) diag = std::max(diag, h(p, p));
      bool solved = cholesky_solve(h, neg, dx);
      for (double load = 1e-14; !solved && load <= 1e-6; load *= 100.0) {
        Matrix hl = h;
        for (int p = 0; p < nv; ++p) hl(p, p) += load * diag;
        solved = cholesky_solve(hl, neg, dx);
      }
      if (!solved) fail(ErrorCode::SolverStall, "disc minimax: Newton system is not positive definite");
      double dec = 0.0;
      for (size_t i = 0; i < dx.size(); ++i) dec -= grad[i] * dx[i];
      if (dec / 2.0 < 1e-12) break;
      double t = 1.0;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
        std::vector<double> yn(y);
        for (int l = 0; l < d; ++l) yn[static_cast<size_t>(l)] += t * dx[static_cast<size_t>(l)];
        const double sn = s + t * dx[static_cast<size_t>(d)];
        std::vector<Complex> wn;
        values(yn, wn);
        double f = tau * sn;
        bool inside = true;
        for (size_t j = 0; j < K && inside; ++j) {
          const double g = sn - std::norm(wn[j]);
          if (!(g > 0.0)) inside = false;
          else f -= std::log(g);
        }
        if (inside && f <= f0 - 0.25 * t * dec) {
          y = std::move(yn);
          s = sn;
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
    }
    if (static_cast<double>(K) / tau < gap) break;
    tau *= 10.0;
  }
  return y;
}

FeasibilityOutcome disc_feasible(const FeasibilityProblem& fp) {
  const int m = fp.m, n = fp.n;
  const double r = fp.radius;
  const Equalities eq = w_basis_equalities(m, n, r);
  const AffineSolution sol = solve_underdetermined(eq.a, eq.b);
  const int d = m - n;
  const int K = fp.samples > 0 ? fp.samples : 128;

  std::vector<double> phis;
  for (int j = 1; j <= K; ++j) phis.push_back(kPi * j / K);
  std::vector<double> dense;
  for (int j = 1; j <= 10 * K; ++j) dense.push_back(kPi * j / (10.0 * K));

  std::vector<double> c;
  std::vector<double> mods(dense.size());
  double dense_max = 0.0;
  for (int round = 0; round <= kExchangeRounds; ++round) {
    const auto smp = disc_samples(sol, phis);
    c = affine_combine(sol, disc_minimax(smp, d, 1e-13 * fp.precision_scale));
    double sample_max = 0.0;
    for (double phi : phis) sample_max = std::max(sample_max, std::abs(w_eval(c, phi)));
    dense_max = 0.0;
    for (size_t i = 0; i < dense.size(); ++i) {
      mods[i] = std::abs(w_eval(c, dense[i]));
      dense_max = std::max(dense_max, mods[i]);
    }
    const auto peaks = refined_peaks(dense, mods, 0.5 * sample_max, [&](double phi) { return std::abs(w_eval(c, phi)); });
    for (const auto& pk : peaks) dense_max = std::max(dense_max, pk.second);
    // The sampled minimax never exceeds the continuous one, so a sampled
    // value over the level already settles infeasibility.
    if (d == 0 || dense_max <= sample_max + 1e-12 * fp.precision_scale ||
        sample_max > 1.0 + 1e-9 * fp.precision_scale)
      break;
    for (const auto& pk : peaks)
      if (pk.second > sample_max) phis.push_back(pk.first);
  }

  FeasibilityOutcome out;
  out.basis = "w";
  out.basis_coeffs = c;
  out.poly = from_w_basis(c, r);
  out.max_modulus = dense_max;
  out.feasible = dense_max <= 1.0 + 1e-9 * fp.precision_scale;
  return out;
}

// ------------------------------------------------------------- segment ----

std::vector<double> chebyshev_grid(double lo, double hi, int count) {
  std::vector<double> x(static_cast<size_t>(count));
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < count; ++i) x[static_cast<size_t>(i)] = mid - half * std::cos(kPi * i / (count - 1));
  return x;
}

FeasibilityOutcome segment_feasible(const FeasibilityProblem& fp) {
  const int m = fp.m, n = fp.n;
  const double r = fp.radius;
  const double level = fp.damping ? 1.0 - fp.damping->eta : 1.0;
  const double right = fp.damping ? -fp.damping->delta : 0.0;
  require(right > -r, "segment: damping offset delta must be smaller than the radius");
  const Equalities eq = chebyshev_equalities(m, n, r);
  const AffineSolution sol = solve_underdetermined(eq.a, eq.b);
  const int d = m - n;
  const int K = fp.samples > 0 ? fp.samples : 30 * (m + 1);

  std::vector<double> xs = chebyshev_grid(-r, right, K);
  const std::vector<double> dense = chebyshev_grid(-r, right, 10 * K);
  std::vector<std::vector<double>> dense_t;
  for (double x : dense) dense_t.push_back(chebyshev_values(m, 1.0 + 2.0 * x / r));

  auto eval_c = [&](const std::vector<double>& c, const std::vector<double>& t) {
    double v = 0.0;
    for (int k = 0; k <= m; ++k) v += c[static_cast<size_t>(k)] * t[static_cast<size_t>(k)];
    return v;
  };

  std::vector<double> c = sol.particular;
  std::vector<double> best;
  double best_max = std::numeric_limits<double>::infinity();
  std::vector<double> mods(dense.size());
  double dense_max = 0.0;
  for (int round = 0; round <= kExchangeRounds; ++round) {
    if (d > 0) {
      // max s s.t. +-(a_i + B_i y) <= t0 - s, y = y+ - y-.
      std::vector<double> a;
      std::vector<std::vector<double>> bmat;
      for (double x : xs) {
        const auto t = chebyshev_values(m, 1.0 + 2.0 * x / r);
        a.push_back(eval_c(sol.particular, t));
        std::vector<double> row(static_cast<size_t>(d), 0.0);
        for (int l = 0; l < d; ++l)
          for (int k = 0; k <= m; ++k) row[static_cast<size_t>(l)] += sol.nullspace(k, l) * t[static_cast<size_t>(k)];
        bmat.push_back(std::move(row));
      }
      double t0 = 0.0;
      for (double v : a) t0 = std::max(t0, std::abs(v));
      t0 += 1.0;
      std::vector<std::vector<double>> lp_a;
      std::vector<double> lp_b;
      for (size_t i = 0; i < xs.size(); ++i) {
        for (int sgn : {1, -1}) {
          std::vector<double> row(static_cast<size_t>(2 * d + 1));
          for (int l = 0; l < d; ++l) {
            row[static_cast<size_t>(l)] = sgn * bmat[i][static_cast<size_t>(l)];
            row[static_cast<size_t>(d + l)] = -sgn * bmat[i][static_cast<size_t>(l)];
          }
          row[static_cast<size_t>(2 * d)] = 1.0;
          lp_a.push_back(std::move(row));
          lp_b.push_back(t0 - sgn * a[i]);
        }
      }
      std::vector<double> obj(static_cast<size_t>(2 * d + 1), 0.0);
      obj.back() = 1.0;
      const LpResult lp = solve_lp(lp_a, lp_b, obj, 1e-12);
      if (lp.status != LpStatus::Optimal)
        fail(ErrorCode::SolverStall, "segment minimax LP did not reach an optimum");
      std::vector<double> y(static_cast<size_t>(d));
      for (int l = 0; l < d; ++l)
        y[static_cast<size_t>(l)] = lp.x[static_cast<size_t>(l)] - lp.x[static_cast<size_t>(d + l)];
      c = affine_combine(sol, y);
    }
    double sample_max = 0.0;
    for (double x : xs) sample_max = std::max(sample_max, std::abs(eval_c(c, chebyshev_values(m, 1.0 + 2.0 * x / r))));
    dense_max = 0.0;
    for (size_t i = 0; i < dense.size(); ++i) {
      mods[i] = std::abs(eval_c(c, dense_t[i]));
      dense_max = std::max(dense_max, mods[i]);
    }
    const auto peaks = refined_peaks(dense, mods, 0.5 * sample_max, [&](double x) {
      return std::abs(eval_c(c, chebyshev_values(m, 1.0 + 2.0 * x / r)));
    });
    for (const auto& pk : peaks) dense_max = std::max(dense_max, pk.second);
    if (dense_max < best_max) {
      best_max = dense_max;
      best = c;
    }
    // Exchange points crowd together near convergence and the LP loses
    // accuracy, so stop as soon as the level test is decided.
    if (d == 0 || dense_max <= sample_max + 1e-12 * fp.precision_scale ||
        dense_max <= level + 1e-10 * fp.precision_scale || sample_max > level + 1e-9 * fp.precision_scale)
      break;
    for (const auto& pk : peaks)
      if (pk.second > sample_max) xs.push_back(pk.first);
  }

  FeasibilityOutcome out;
  out.basis = "chebyshev";
  out.basis_coeffs = best;
  out.poly = from_chebyshev_basis(best, r);
  out.max_modulus = best_max;
  out.feasible = best_max <= level + 1e-9 * fp.precision_scale;
  return out;
}

// ----------------------------------------------------------- threshold ----

FeasibilityOutcome threshold_feasible(const FeasibilityProblem& fp) {
  const int m = fp.m, n = fp.n;
  const double r = fp.radius;
  const Equalities eq = w_basis_equalities(m, n, r);
  std::vector<std::vector<double>> lp_a;
  std::vector<double> lp_b;
  for (int j = 0; j <= n; ++j) {
    std::vector<double> row(static_cast<size_t>(m) + 1), neg(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      row[static_cast<size_t>(k)] = eq.a(j, k);
      neg[static_cast<size_t>(k)] = -eq.a(j, k);
    }
    lp_a.push_back(std::move(row));
    lp_b.push_back(eq.b[static_cast<size_t>(j)]);
    lp_a.push_back(std::move(neg));
    lp_b.push_back(-eq.b[static_cast<size_t>(j)]);
  }
  const std::vector<double> obj(static_cast<size_t>(m) + 1, 0.0);
  const LpResult lp = solve_lp(lp_a, lp_b, obj, 1e-10 * fp.precision_scale);

  FeasibilityOutcome out;
  out.basis = "w";
  out.feasible = lp.status == LpStatus::Optimal;
  if (out.feasible) {
    out.basis_coeffs = lp.x;
    out.poly = from_w_basis(lp.x, r);
    out.max_modulus = *std::min_element(lp.x.begin(), lp.x.end());
    // Guard against a phase-1 tolerance accepting a visibly violated equality.
    for (int j = 0; j <= n; ++j) {
      double v = 0.0;
      for (int k = 0; k <= m; ++k) v += eq.a(j, k) * lp.x[static_cast<size_t>(k)];
      if (std::abs(v - eq.b[static_cast<size_t>(j)]) > 1e-8 * fp.precision_scale) out.feasible = false;
    }
  }
  return out;
}

// ----------------------------------------------------------- bisection ----

OptimalResult bisect(int m, int n, Geometry g, std::optional<Damping> damping, double lo, double hi,
                     double precision_scale, double width) {
  OptimalResult res;
  res.m = m;
  res.n = n;
  res.geometry = g;
  res.damping = damping;
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  auto check = [&](double r) {
    FeasibilityProblem fp;
    fp.m = m;
    fp.n = n;
    fp.radius = r;
    fp.geometry = g;
    fp.damping = damping;
    fp.precision_scale = precision_scale;
    ++res.feasibility_checks;
    return feasible(fp);
  };
  auto accept = [&](double r, FeasibilityOutcome&& out, double w) {
    res.radius = r;
    res.poly = std::move(out.poly);
    res.basis = std::move(out.basis);
    res.basis_coeffs = std::move(out.basis_coeffs);
    res.max_modulus = out.max_modulus;
    res.bisection_width = w;
  };

  FeasibilityOutcome top = check(hi);
  if (top.feasible) {
    accept(hi, std::move(top), 0.0);
    return res;
  }
  FeasibilityOutcome best = check(lo);
  for (int k = 0; k < 40 && !best.feasible; ++k) {
    hi = lo;
    lo *= 0.5;
    best = check(lo);
  }
  if (!best.feasible)
    fail(ErrorCode::SolverStall, std::string("no feasible ") + to_string(g) + " radius found for m = " +
                                     std::to_string(m) + ", n = " + std::to_string(n));
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    FeasibilityOutcome out = check(mid);
    if (out.feasible) {
      lo = mid;
      best = std::move(out);
    } else {
      hi = mid;
    }
  }
  accept(lo, std::move(best), hi - lo);
  return res;
}

}  // namespace

FeasibilityOutcome feasible(const FeasibilityProblem& fp) {
  require(fp.n >= 1 && fp.n <= fp.m, "feasible: need 1 <= n <= m");
  require(fp.radius > 0.0 && std::isfinite(fp.radius), "feasible: radius must be positive");
  require(fp.precision_scale > 0.0, "feasible: precision scale must be positive");
  if (fp.damping) {
    require(fp.geometry == Geometry::Segment, "damping applies to the segment geometry only");
    require(fp.damping->eta >= 0.0 && fp.damping->eta < 1.0, "damping: eta must lie in [0, 1)");
    require(fp.damping->delta >= 0.0, "damping: delta must be non-negative");
  }
  if (fp.samples > 0) require(fp.samples >= 4 * (fp.m - fp.n) + 16, "feasible: too few samples");
  switch (fp.geometry) {
    case Geometry::Disc: return disc_feasible(fp);
    case Geometry::Segment: return segment_feasible(fp);
    case Geometry::Threshold:
      require(fp.m > fp.n, "threshold feasibility needs m > n");
      return threshold_feasible(fp);
  }
  fail(ErrorCode::InvalidArgument, "unknown geometry");
}

OptimalResult optimal_radius(int m, int n, Geometry geometry, const OptimalOptions& opt) {
  require(n >= 1 && n <= m && m <= 15, "optimal_radius: need 1 <= n <= m <= 15");
  require(opt.bisection_width > 0.0, "optimal_radius: bisection width must be positive");
  if (geometry == Geometry::Threshold) return threshold_factor(m, n, opt.precision_scale);
  double lo = 0.0, hi = 0.0;
  if (geometry == Geometry::Disc) {
    require(!opt.damping, "damping applies to the segment geometry only");
    hi = absolute_upper(m, n).value;
    lo = m > n ? threshold_upper_lower(m, n).lo : 0.5 * hi;
  } else if (opt.damping) {
    hi = damped_parabolic_upper(m, n, opt.damping->eta, opt.damping->delta).value;
    lo = 0.5 * hi;
  } else {
    hi = parabolic_upper(m, n).value;
    lo = parabolic_lower(m, n).value;
  }
  OptimalResult res = bisect(m, n, geometry, opt.damping, lo, hi, opt.precision_scale, opt.bisection_width);
  if (geometry == Geometry::Disc) res.touch_points = touch_points(res, 1e-4);
  return res;
}

OptimalResult threshold_factor(int m, int n, double precision_scale) {
  require(n >= 1 && m > n && m <= 15, "threshold_factor: need 1 <= n < m <= 15");
  const ThresholdBracket b = threshold_upper_lower(m, n);
  OptimalResult res = bisect(m, n, Geometry::Threshold, std::nullopt, b.lo, b.hi, precision_scale, 1e-3);
  res.nonneg_coeffs = res.basis_coeffs;
  return res;
}

std::vector<Complex> touch_points(const OptimalResult& res, double tol) {
  require(res.geometry == Geometry::Disc, "touch_points: disc results only");
  constexpr int kGrid = 20000;
  std::vector<double> mods(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    const double phi = 2.0 * kPi * i / kGrid;
    mods[static_cast<size_t>(i)] = res.basis == "w" ? std::abs(w_eval(res.basis_coeffs, phi))
                                                   : std::abs(res.poly(res.radius * (std::polar(1.0, phi) - 1.0)));
  }
  auto hot = [&](int i) { return mods[static_cast<size_t>(((i % kGrid) + kGrid) % kGrid)] >= 1.0 - tol; };
  // Start scanning just after a cold point so wrap-around clusters stay whole.
  int start = -1;
  for (int i = 0; i < kGrid; ++i)
    if (!hot(i)) {
      start = i;
      break;
    }
  if (start < 0) return {Complex(0.0)};
  std::vector<Complex> out;
  for (int k = 1; k <= kGrid; ++k) {
    const int i = start + k;
    if (!hot(i) || hot(i - 1)) continue;
    int best = i, j = i;
    bool has_origin = false;
    for (; hot(j) && j < start + kGrid + 1; ++j) {
      if (j % kGrid == 0) has_origin = true;
      if (mods[static_cast<size_t>(j % kGrid)] > mods[static_cast<size_t>(best % kGrid)]) best = j;
    }
    if (has_origin) {
      out.emplace_back(0.0);
    } else {
      const double phi = 2.0 * kPi * (best % kGrid) / kGrid;
      out.push_back(res.radius * (std::polar(1.0, phi) - 1.0));
    }
  }
  return out;
}

int alternation_count(const Poly& p, const Interval& iv, double level, double tol, int grid) {
  require(grid >= 3, "alternation_count: grid too small");
  std::vector<double> v(static_cast<size_t>(grid));
  for (int i = 0; i < grid; ++i) v[static_cast<size_t>(i)] = p(iv.lo() + iv.width() * i / (grid - 1));
  std::vector<double> a(v.size());
  for (size_t i = 0; i < v.size(); ++i) a[i] = std::abs(v[i]);
  int count = 0;
  int last = 0;
  for (size_t i : local_maxima(a, level - tol - 1e-300)) {
    if (a[i] < level - tol) continue;
    const int s = v[i] > 0 ? 1 : -1;
    if (s != last) {
      ++count;
      last = s;
    }
  }
  return count;
}

}  // namespace rkstab

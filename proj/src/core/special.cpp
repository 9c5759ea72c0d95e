#include "rkstab/special.hpp"

#include <cmath>
#include <string>

#include "rkstab/error.hpp"

namespace rkstab {

double generalized_binomial(double t, int k) {
  if (k < 0) return 0.0;
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= (t - i) / (i + 1);
  return acc;
}

PochhammerTable::PochhammerTable(double a, int n) : alpha(a), upto(n) {
  require(n >= 0, "pochhammer: upto must be non-negative");
  values.resize(static_cast<size_t>(n) + 1);
  values[0] = 1.0;
  for (int i = 0; i < n; ++i)
    values[static_cast<size_t>(i) + 1] = values[static_cast<size_t>(i)] * (a + i);
}

double pochhammer(double alpha, int n) { return PochhammerTable(alpha, n)[n]; }

Poly laguerre_poly(int n, double gamma) {
  require(n >= 0, "laguerre: n must be non-negative");
  std::vector<double> c(static_cast<size_t>(n) + 1);
  double sign_over_fact = 1.0;  // (-1)^l / l!
  for (int l = 0; l <= n; ++l) {
    if (l > 0) sign_over_fact *= -1.0 / l;
    c[static_cast<size_t>(l)] = generalized_binomial(n + gamma, n - l) * sign_over_fact;
  }
  return Poly(std::move(c));
}

Poly g_poly(int n, double alpha) {
  require(n >= 1, "G_n: n must be at least 1");
  require(alpha > 0.0, "G_n: alpha must be positive");
  const PochhammerTable ph(alpha, n);
  std::vector<double> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<size_t>(n - i)] = binomial(n, i) * ph[i];
  return Poly(std::move(c));
}

Poly r_poly(int n, double alpha, double beta) {
  const Poly g = g_poly(n, alpha);
  const double floor = pochhammer(alpha, n);
  require(beta >= floor, "R_n: beta = " + std::to_string(beta) +
                             " is below (alpha)_n = " + std::to_string(floor));
  const double s = n % 2 == 0 ? -1.0 : 1.0;
  return Poly::constant(beta) + s * g;
}

Poly chebyshev_shifted(int m, const Interval& iv) {
  require(m >= 0, "chebyshev: degree must be non-negative");
  const Poly u = Poly::linear(-(iv.hi() + iv.lo()) / iv.width(), 2.0 / iv.width());
  Poly prev = Poly::constant(1.0);
  if (m == 0) return prev;
  Poly cur = u;
  for (int k = 1; k < m; ++k) {
    Poly next = 2.0 * (u * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> chebyshev_bernstein_ordinates(int m) {
  require(m >= 0, "chebyshev: degree must be non-negative");
  std::vector<double> q(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i)
    q[static_cast<size_t>(i)] = ((m - i) % 2 == 0 ? 1.0 : -1.0) * binomial(2 * m, 2 * i) / binomial(m, i);
  return q;
}

double chebyshev_blossom_tail(int m, int n, const Interval& iv, double x) {
  require(n >= 0 && n <= m, "chebyshev_blossom_tail: need 0 <= n <= m");
  const auto q = chebyshev_bernstein_ordinates(m);
  const int k = m - n;
  const double t = (x - iv.lo()) / iv.width();
  double acc = 0.0;
  for (int i = 0; i <= k; ++i)
    acc += q[static_cast<size_t>(i)] * binomial(k, i) * std::pow(1.0 - t, k - i) * std::pow(t, i);
  return acc;
}

double laguerre_smallest_zero(int p, double alpha) {
  require(p >= 1, "laguerre zero: p must be at least 1");
  require(alpha > -1.0, "laguerre zero: alpha must exceed -1");
  // All zeros are real and positive, so Newton from 0 increases monotonically
  // to the smallest one.
  const Poly l = laguerre_poly(p, alpha);
  const Poly dl = l.derivative();
  double x = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double step = l(x) / dl(x);
    x -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace rkstab

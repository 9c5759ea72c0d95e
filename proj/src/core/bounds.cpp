#include "rkstab/bounds.hpp"

#include <cmath>
#include <string>

#include "rkstab/error.hpp"
#include "rkstab/quadrature.hpp"
#include "rkstab/roots.hpp"
#include "rkstab/special.hpp"

namespace rkstab {

namespace {

void check_mn(int m, int n, const char* who) {
  require(n >= 1 && n <= m, std::string(who) + ": need 1 <= n <= m, got m = " +
                                std::to_string(m) + ", n = " + std::to_string(n));
}

std::string laguerre_equation(int m, int n, const std::string& rhs) {
  return "L_" + std::to_string(n) + "^(" + std::to_string(-m - 1) + ")(x) - " + rhs + " = 0";
}

std::vector<double> to_vector(const Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Negative root of L_n^(-m-1)(x) = b, bracketed from the analytic estimate.
RootResult laguerre_level_root(int m, int n, double b, Poly& equation) {
  equation = laguerre_poly(n, -m - 1.0) - Poly::constant(b);
  const double hint = std::min(mu_bound(m, n, b), -1.0);
  // For even n and b = C(m,n) the origin is an exact root; rounding in the
  // constant term would otherwise give f(0) a spurious sign. Deflate it.
  if (std::abs(equation.coeff(0)) <= 1e-12 * b) {
    std::vector<double> c = to_vector(equation);
    c[0] = 0.0;
    equation = Poly(c);
    return unique_negative_root(Poly(std::vector<double>(c.begin() + 1, c.end())), hint);
  }
  return unique_negative_root(equation, hint);
}

void check_cap(double value, double cap, const std::string& what) {
  if (value > cap + 1e-9 * std::max(1.0, std::abs(cap)))
    fail(ErrorCode::Degenerate, what + ": root bound " + std::to_string(value) +
                                    " exceeds its analytic cap " + std::to_string(cap));
}

}  // namespace

const char* to_string(BoundKind k) { return k == BoundKind::Upper ? "upper" : "lower"; }

BoundReport absolute_upper(int m, int n) {
  check_mn(m, n, "absolute_upper");
  Poly eq;
  const RootResult root = laguerre_level_root(m, n, binomial(m, n), eq);
  BoundReport r;
  r.name = "absolute_upper";
  r.m = m;
  r.n = n;
  r.value = -root.value / 2.0;
  r.kind = BoundKind::Upper;
  r.source = "blossom of an optimal disc polynomial at (z^[n], 0^[m-n]) and the Walsh coincidence theorem";
  r.root_equation = laguerre_equation(m, n, "C(m,n)");
  r.equation_coeffs = to_vector(eq);
  r.aux["xi"] = root.value;
  r.aux["residual"] = root.residual;
  r.aux["cap"] = m - 0.5 * (1 + (n % 2 == 0 ? 1 : -1));
  check_cap(r.value, r.aux["cap"], r.name);
  return r;
}

BoundReport parabolic_upper(int m, int n) {
  check_mn(m, n, "parabolic_upper");
  Poly eq;
  const double c2 = binomial(2 * m, 2 * n);
  const RootResult root = laguerre_level_root(m, n, c2, eq);
  BoundReport r;
  r.name = "parabolic_upper";
  r.m = m;
  r.n = n;
  r.value = -root.value;
  r.kind = BoundKind::Upper;
  r.source = "Lubinsky-Ziegler domination of Bernstein ordinates by the shifted Chebyshev polynomial";
  r.root_equation = laguerre_equation(m, n, "C(2m,2n)");
  r.equation_coeffs = to_vector(eq);
  r.aux["xi"] = root.value;
  r.aux["residual"] = root.residual;
  r.aux["closed_form"] = std::pow(factorial(n), 1.0 / n) * std::pow(c2 - binomial(m, n), 1.0 / n) +
                         2.0 * m - (n % 2 == 0 ? 2.0 : 0.0);
  check_cap(r.value, r.aux["closed_form"], r.name);
  return r;
}

BoundReport parabolic_lower(int m, int n) {
  check_mn(m, n, "parabolic_lower");
  Poly eq;
  const RootResult root = laguerre_level_root(m, n, binomial(m, n), eq);
  BoundReport r;
  r.name = "parabolic_lower";
  r.m = m;
  r.n = n;
  r.value = -root.value;
  r.kind = BoundKind::Lower;
  r.source = "degree elevation of truncated Bernstein ordinates (variation diminishing)";
  r.root_equation = laguerre_equation(m, n, "C(m,n)");
  r.equation_coeffs = to_vector(eq);
  r.aux["xi"] = root.value;
  r.aux["residual"] = root.residual;
  return r;
}

double parabolic_limit_cap(int n) {
  require(n >= 1, "parabolic_limit_cap: n must be at least 1");
  // n!/(2n)! as a running product to stay finite for large n.
  double ratio = 1.0;
  for (int k = n + 1; k <= 2 * n; ++k) ratio /= k;
  return 4.0 * std::pow(ratio, 1.0 / n);
}

Interval stage_inequality(int m, int n, int p, double r_prev) {
  require(p >= 1 && 2 * p - 1 <= n && n <= m, "stage_inequality: need m >= n >= 2p-1 >= 1");
  require(r_prev > 0.0, "stage_inequality: previous radius must be positive");
  return Interval(r_prev, lambda_max(m, p) * r_prev);
}

Poly damping_polynomial(int m, int n, double eta, double delta) {
  check_mn(m, n, "damping_polynomial");
  require(eta >= 0.0 && eta < 1.0, "damping: eta must lie in [0, 1)");
  require(delta >= 0.0, "damping: delta must be non-negative");
  const int k = m - n;
  Poly p = pow(Poly::linear(delta, 1.0), k) * laguerre_poly(n, -m - 1.0);
  std::vector<double> tail(static_cast<size_t>(k) + 1, 0.0);
  const double scale = (1.0 - eta) * binomial(m, n);
  for (int i = 0; i <= k; ++i) {
    const double sign = (k - i) % 2 == 0 ? 1.0 : -1.0;
    tail[static_cast<size_t>(i)] = scale * sign * binomial(2 * m, 2 * i) * binomial(k, i) /
                                   binomial(m, i) * std::pow(delta, k - i);
  }
  return p - Poly(std::move(tail));
}

BoundReport damped_parabolic_upper(int m, int n, double eta, double delta) {
  const Poly eq = damping_polynomial(m, n, eta, delta);
  // Cauchy bound on root moduli.
  const int d = eq.degree();
  double cauchy = 1.0;
  for (int i = 0; i < d; ++i) cauchy = std::max(cauchy, 1.0 + std::abs(eq.coeff(i) / eq.coeff(d)));
  const RootResult root = smallest_negative_root(eq, -cauchy);
  BoundReport r;
  r.name = "damped_parabolic_upper";
  r.m = m;
  r.n = n;
  r.value = -root.value;
  r.kind = BoundKind::Upper;
  r.source = "Lubinsky-Ziegler domination applied on the damped segment [-l, -delta] with threshold 1-eta";
  r.root_equation = "most negative root of (x+delta)^(m-n) L_n^(-m-1)(x) - (1-eta) C(m,n) S(x, delta)";
  r.equation_coeffs = to_vector(eq);
  r.aux["eta"] = eta;
  r.aux["delta"] = delta;
  r.aux["root"] = root.value;
  r.aux["residual"] = root.residual;
  r.aux["search_lo"] = -cauchy;
  return r;
}

std::pair<Poly, double> closed_form_optimal(int m, int order) {
  require(order == 1 || order == 2, "closed_form_optimal: order must be 1 or 2");
  require(m >= order, "closed_form_optimal: need m >= order");
  if (order == 1) return {pow(Poly::linear(1.0, 1.0 / m), m), static_cast<double>(m)};
  const double r = m - 1.0;
  Poly p = (r / m) * pow(Poly::linear(1.0, 1.0 / r), m) + Poly::constant(1.0 / m);
  return {p, r};
}

DampedChebyshev damped_chebyshev(int m, double eta) {
  require(m >= 1, "damped_chebyshev: m must be at least 1");
  require(eta >= 0.0 && eta < 1.0, "damped_chebyshev: eta must lie in [0, 1)");
  const double w0 = 1.0 + eta / (static_cast<double>(m) * m);
  const Poly t = chebyshev_shifted(m, Interval(-1.0, 1.0));
  const double tw = t(w0);
  const double w1 = tw / t.derivative()(w0);
  DampedChebyshev out;
  out.poly = (1.0 / tw) * t.compose_affine(w0, w1);
  out.span = (1.0 + w0) / w1;
  out.delta = (w0 - 1.0) / w1;
  out.eta = 1.0 - 1.0 / tw;
  return out;
}

ThresholdBracket threshold_upper_lower(int m, int n) {
  require(n >= 1 && m > n, "threshold_upper_lower: need m > n >= 1");
  ThresholdBracket b;
  const int p = (n + 1) / 2;
  if (n % 2 == 1) {
    b.lo = laguerre_smallest_zero(p, m - 2.0 * p + 1);
    b.hi = laguerre_smallest_zero(p, m - 1.0 * p);
    b.rule = "smallest Laguerre zeros l_p^(m-2p+1) <= R <= l_p^(m-p), n = 2p-1";
  } else {
    b.lo = laguerre_smallest_zero(p, m - 2.0 * p);
    b.hi = laguerre_smallest_zero(p, m - 1.0 - p);
    b.rule = "R_{m,2p} = R_{m-1,2p-1}: l_p^(m-2p) <= R <= l_p^(m-1-p)";
  }
  const double cap = m - n + 1.0;
  b.hi = std::min(b.hi, cap);
  b.lo = std::min(b.lo, b.hi);
  return b;
}

}  // namespace rkstab

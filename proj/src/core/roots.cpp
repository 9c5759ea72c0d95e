#include "rkstab/roots.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rkstab/error.hpp"
#include "rkstab/special.hpp"

namespace rkstab {

namespace {

bool opposite(double a, double b) { return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0); }

// Bisect a sign-change bracket [lo, hi] and polish with Newton.
RootResult refine(const ScalarFn& f, const ScalarFn& df, double lo, double hi, double flo,
                  double fhi) {
  RootResult r;
  r.bracket = Interval(lo, hi);
  r.scale = std::max({1.0, std::abs(flo), std::abs(fhi)});
  const double target = 1e-13 * std::max(std::abs(lo), std::abs(hi));
  if (flo == 0.0) hi = lo;
  if (fhi == 0.0) lo = hi;
  int it = 0;
  while (hi - lo > target && it < 400) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    ++it;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (opposite(flo, fm)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int k = 0; k < 5 && fx != 0.0; ++k) {
    const double d = df ? df(x) : (f(x + 1e-6) - f(x - 1e-6)) / 2e-6;
    if (d == 0.0 || !std::isfinite(d)) break;
    const double xn = x - fx / d;
    if (!r.bracket.contains(xn)) break;
    const double fn = f(xn);
    ++it;
    if (!(std::abs(fn) < std::abs(fx))) break;
    x = xn;
    fx = fn;
  }
  r.value = x;
  r.residual = fx;
  r.iterations = it;
  return r;
}

}  // namespace

RootResult unique_negative_root(const ScalarFn& f, double lower_hint, const ScalarFn& df) {
  require(std::isfinite(lower_hint) && lower_hint < 0.0,
          "unique_negative_root: lower hint must be negative");
  double hi = 0.0;
  double fhi = f(hi);
  if (std::abs(fhi) <= 1e-14) {
    hi = -1e-9 * std::max(1.0, std::abs(lower_hint));
    fhi = f(hi);
  }
  double lo = lower_hint;
  double flo = f(lo);
  for (int k = 0; k < 64 && !opposite(flo, fhi); ++k) {
    lo *= 2.0;
    flo = f(lo);
  }
  if (!opposite(flo, fhi) || !std::isfinite(flo))
    fail(ErrorCode::NoSignChange, "no sign change in [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]");
  return refine(f, df, lo, hi, flo, fhi);
}

RootResult unique_negative_root(const Poly& p, double lower_hint) {
  const Poly dp = p.derivative();
  return unique_negative_root([&p](double x) { return p(x); }, lower_hint,
                              [&dp](double x) { return dp(x); });
}

double mu_bound(int m, int n, double b) {
  require(n >= 1 && m >= n, "mu_bound: need 1 <= n <= m");
  const double cmn = binomial(m, n);
  require(b >= cmn * (1.0 - 1e-14), "mu_bound: b must be at least C(m, n)");
  const double base = std::max(0.0, b * factorial(n) - pochhammer(m - n + 1, n));
  return -std::pow(base, 1.0 / n) - 2.0 * m + (n % 2 == 0 ? 2.0 : 0.0);
}

namespace {

// Odd-multiplicity roots of p in (lo, hi), ascending. Consecutive critical
// points (found recursively from p') split the window into pieces on which p
// is monotone, so each piece holds at most one crossing.
std::vector<double> crossings(const Poly& p, double lo, double hi) {
  const int deg = p.degree();
  std::vector<double> out;
  if (deg <= 0) return out;
  const Poly dp = p.derivative();
  std::vector<double> cuts{lo};
  for (double c : crossings(dp, lo, hi)) cuts.push_back(c);
  cuts.push_back(hi);
  const ScalarFn f = [&p](double x) { return p(x); };
  const ScalarFn df = [&dp](double x) { return dp(x); };
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k], b = cuts[k + 1];
    const double fa = p(a), fb = p(b);
    if (fa == 0.0 || fb == 0.0 || (fa > 0.0) == (fb > 0.0)) continue;
    out.push_back(refine(f, df, a, b, fa, fb).value);
  }
  return out;
}

}  // namespace

RootResult smallest_negative_root(const Poly& p, double search_lo) {
  require(std::isfinite(search_lo) && search_lo < 0.0,
          "smallest_negative_root: search_lo must be negative");
  require(p.degree() >= 1, "smallest_negative_root: polynomial must be non-constant");
  const Poly dp = p.derivative();
  const ScalarFn f = [&p](double x) { return p(x); };
  const ScalarFn df = [&dp](double x) { return dp(x); };

  // Monotone pieces between critical points, scanned from the left. An
  // even-multiplicity root shows up as a critical point where p vanishes.
  std::vector<double> cuts{search_lo};
  for (double c : crossings(dp, search_lo, 0.0)) cuts.push_back(c);
  cuts.push_back(0.0);
  double scale = 1.0;
  for (double c : cuts) scale = std::max(scale, std::abs(p(c)));

  const double f_lo = p(search_lo);
  if (f_lo == 0.0) {
    RootResult r;
    r.value = search_lo;
    r.bracket = Interval(search_lo, cuts[1]);
    r.scale = scale;
    return r;
  }
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k], b = cuts[k + 1];
    const double fa = p(a), fb = p(b);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) return refine(f, df, a, b, fa, fb);
    if (k + 2 < cuts.size() && std::abs(fb) <= 1e-10 * scale) {
      RootResult r;
      r.value = b;
      r.bracket = Interval(a, cuts[k + 2]);
      r.residual = fb;
      r.scale = scale;
      r.residual_only = !opposite(fa, p(cuts[k + 2]));
      return r;
    }
  }
  fail(ErrorCode::NoRootFound,
       "no real root found in [" + std::to_string(search_lo) + ", 0)");
}

}  // namespace rkstab

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <rkstab/poly.hpp>

namespace testing {

// Fixed seeds everywhere so failures reproduce.
inline std::mt19937_64& rng() {
  static thread_local std::mt19937_64 gen(20261015);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

// Random member of the class: Taylor coefficients 1/j! through order n,
// free coefficients drawn with roughly the size of the next Taylor terms.
inline rkstab::Poly random_member(int m, int n) {
  std::vector<double> c(static_cast<size_t>(m) + 1);
  double f = 1.0;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) f /= j;
    c[static_cast<size_t>(j)] = j <= n ? f : f * uniform(-2.0, 2.0);
  }
  return rkstab::Poly(c);
}

// Dense max of |p| over the circle |z + r| = r.
inline double circle_max(const rkstab::Poly& p, double r, int samples) {
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    double t = 2.0 * M_PI * k / samples;
    std::complex<double> z(-r + r * std::cos(t), r * std::sin(t));
    best = std::max(best, std::abs(p(z)));
  }
  return best;
}

inline double segment_max(const rkstab::Poly& p, double lo, double hi, int samples) {
  double best = 0.0;
  for (int k = 0; k <= samples; ++k) {
    best = std::max(best, std::abs(p(lo + (hi - lo) * k / samples)));
  }
  return best;
}

}  // namespace testing

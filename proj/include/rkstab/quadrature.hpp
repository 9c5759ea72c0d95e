#pragma once

#include <vector>

namespace rkstab {

/// Largest supported number of nodes. Moment-based construction loses
/// accuracy quickly beyond this.
inline constexpr int kMaxGaussPoints = 6;

/// Moments of dmu(x) = m x^(-m-1) dx on [1, inf): m/(m-k), k = 0..upto.
/// Rejects upto >= m (divergent).
std::vector<double> moments(int m, int upto);

/// Moments of the same measure about x = 1: int (x-1)^k dmu = k!(m-k-1)!/(m-1)!.
std::vector<double> centered_moments(int m, int upto);

/// p-point Gauss rule for dmu, nodes ascending.
struct QuadRule {
  int m = 0;
  int p = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Three-term recurrence coefficients of the monic orthogonal polynomials
  /// in the variable x - 1.
  std::vector<double> alpha;
  std::vector<double> beta;
};

/// Requires 1 <= p <= kMaxGaussPoints and 2p - 1 < m. Throws Degenerate when
/// a recurrence coefficient beta_k comes out non-positive.
QuadRule gauss_rule(int m, int p);

/// Largest node of gauss_rule(m, p).
double lambda_max(int m, int p);

}  // namespace rkstab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rkstab/poly.hpp"

namespace rkstab {

enum class Geometry { Disc, Segment, Threshold };

const char* to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

/// |P| <= 1 - eta on [-r, -delta] instead of |P| <= 1 on [-r, 0].
struct Damping {
  double eta = 0.0;
  double delta = 0.0;
};

struct FeasibilityProblem {
  int m = 1;
  int n = 1;
  double radius = 1.0;
  Geometry geometry = Geometry::Disc;
  std::optional<Damping> damping;
  /// Solve samples: boundary angles for the disc, segment grid points.
  /// 0 picks the default (128 angles; 30(m+1) Chebyshev points).
  int samples = 0;
  /// Multiplies every solver tolerance (1 strict, 10 fast).
  double precision_scale = 1.0;
};

struct FeasibilityOutcome {
  bool feasible = false;
  Poly poly;
  /// "w": coefficients of (1 + z/r)^k. "chebyshev": of T_k(1 + 2z/r).
  std::string basis;
  std::vector<double> basis_coeffs;
  /// Disc and segment: max |P| over the verification grid (10x the solve
  /// grid). Threshold: the smallest basis coefficient.
  double max_modulus = 0.0;
};

/// Disc: minimize the max of |P| on the circle |z + r| = r by a log-barrier
/// Newton method, refined by exchanging in local maxima of a 10x denser
/// grid. Segment: the same minimax on [-r, 0] as a linear program in a
/// Chebyshev basis. Threshold: linear feasibility of nonnegative
/// coefficients in powers of (1 + z/r), which makes every derivative
/// nonnegative at -r. Free variables are the coefficients above order n.
FeasibilityOutcome feasible(const FeasibilityProblem& fp);

struct OptimalOptions {
  std::optional<Damping> damping;
  double precision_scale = 1.0;
  double bisection_width = 1e-3;
};

struct OptimalResult {
  int m = 0;
  int n = 0;
  Geometry geometry = Geometry::Disc;
  std::optional<Damping> damping;
  double radius = 0.0;
  Poly poly;
  std::string basis;
  std::vector<double> basis_coeffs;
  double bisection_width = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double max_modulus = 0.0;
  int feasibility_checks = 0;
  /// Disc: contact loci of |P| = 1 on the boundary circle.
  std::vector<Complex> touch_points;
  /// Threshold: the nonnegative coefficients certifying absolute monotonicity.
  std::vector<double> nonneg_coeffs;
};

/// Largest feasible radius, bisected between the analytic bounds. The upper
/// bound is tried first and returned exactly when it is attained. Valid for
/// 1 <= n <= m <= 15.
OptimalResult optimal_radius(int m, int n, Geometry geometry, const OptimalOptions& opt = {});

/// Optimal threshold factor; requires m > n.
OptimalResult threshold_factor(int m, int n, double precision_scale = 1.0);

/// Clusters of boundary points with |P| >= 1 - tol on the full circle
/// |z + r| = r. A cluster containing z = 0 is represented by 0.
std::vector<Complex> touch_points(const OptimalResult& res, double tol);

/// Number of sign alternations between consecutive extrema of P on iv with
/// |P| >= level - tol, scanned on a grid of `grid` points.
int alternation_count(const Poly& p, const Interval& iv, double level, double tol, int grid = 20000);

}  // namespace rkstab

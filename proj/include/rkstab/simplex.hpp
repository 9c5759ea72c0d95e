#pragma once

#include <vector>

namespace rkstab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

/// maximize c.x subject to A x <= b, x >= 0, by a dense two-phase tableau
/// simplex. Entering column by most negative reduced cost, ties broken by
/// variable index; leaving row by minimum ratio, ties by basic index. After
/// more than m+n consecutive degenerate pivots the entering rule switches to
/// Bland's (smallest index with negative cost), so cycling terminates. A
/// negative b triggers phase 1 with one auxiliary variable. Throws
/// SolverStall when the pivot budget runs out.
LpResult solve_lp(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, double eps = 1e-10, int max_pivots = 0);

}  // namespace rkstab

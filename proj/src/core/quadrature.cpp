#include "rkstab/quadrature.hpp"

#include <cmath>
#include <string>

#include "rkstab/error.hpp"
#include "rkstab/linalg.hpp"

namespace rkstab {

std::vector<double> moments(int m, int upto) {
  require(m >= 1 && upto >= 0, "moments: need m >= 1 and upto >= 0");
  require(upto < m, "moment of order " + std::to_string(upto) + " diverges for m = " +
                        std::to_string(m));
  std::vector<double> out(static_cast<size_t>(upto) + 1);
  for (int k = 0; k <= upto; ++k) out[static_cast<size_t>(k)] = static_cast<double>(m) / (m - k);
  return out;
}

std::vector<double> centered_moments(int m, int upto) {
  require(m >= 1 && upto >= 0, "moments: need m >= 1 and upto >= 0");
  require(upto < m, "moment of order " + std::to_string(upto) + " diverges for m = " +
                        std::to_string(m));
  std::vector<double> out(static_cast<size_t>(upto) + 1);
  out[0] = 1.0;
  for (int k = 1; k <= upto; ++k)
    out[static_cast<size_t>(k)] = out[static_cast<size_t>(k - 1)] * k / (m - k);
  return out;
}

QuadRule gauss_rule(int m, int p) {
  require(p >= 1 && p <= kMaxGaussPoints,
          "gauss_rule: p must lie in [1, " + std::to_string(kMaxGaussPoints) + "]");
  require(2 * p - 1 < m, "gauss_rule: need 2p - 1 < m");
  const auto mu = centered_moments(m, 2 * p - 1);
  const int L = 2 * p;

  // Chebyshev algorithm: sigma_k(l) = int pi_k(t) t^l dmu in t = x - 1.
  std::vector<double> alpha(static_cast<size_t>(p)), beta(static_cast<size_t>(p));
  std::vector<double> prev(static_cast<size_t>(L), 0.0);  // sigma_{k-2}
  std::vector<double> cur(mu.begin(), mu.end());          // sigma_{k-1}
  alpha[0] = mu[1] / mu[0];
  beta[0] = mu[0];
  for (int k = 1; k < p; ++k) {
    std::vector<double> next(static_cast<size_t>(L), 0.0);
    for (int l = k; l < L - k; ++l)
      next[static_cast<size_t>(l)] = cur[static_cast<size_t>(l + 1)] -
                                     alpha[static_cast<size_t>(k - 1)] * cur[static_cast<size_t>(l)] -
                                     beta[static_cast<size_t>(k - 1)] * prev[static_cast<size_t>(l)];
    const double skk = next[static_cast<size_t>(k)];
    const double sk1 = cur[static_cast<size_t>(k - 1)];
    alpha[static_cast<size_t>(k)] =
        next[static_cast<size_t>(k + 1)] / skk - cur[static_cast<size_t>(k)] / sk1;
    beta[static_cast<size_t>(k)] = skk / sk1;
    if (!(beta[static_cast<size_t>(k)] > 0.0))
      fail(ErrorCode::Degenerate, "recurrence coefficient beta_" + std::to_string(k) +
                                      " is not positive for m = " + std::to_string(m) +
                                      ", p = " + std::to_string(p));
    prev = std::move(cur);
    cur = std::move(next);
  }

  std::vector<double> off;
  for (int k = 1; k < p; ++k) off.push_back(std::sqrt(beta[static_cast<size_t>(k)]));
  const auto eig = tridiagonal_eigen(alpha, off);

  QuadRule rule;
  rule.m = m;
  rule.p = p;
  rule.alpha = alpha;
  rule.beta = beta;
  for (int i = 0; i < p; ++i) {
    rule.nodes.push_back(eig.values[static_cast<size_t>(i)] + 1.0);
    const double v = eig.first_components[static_cast<size_t>(i)];
    rule.weights.push_back(beta[0] * v * v);
  }
  return rule;
}

double lambda_max(int m, int p) { return gauss_rule(m, p).nodes.back(); }

}  // namespace rkstab

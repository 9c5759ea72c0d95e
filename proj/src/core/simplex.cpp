#include "rkstab/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "rkstab/error.hpp"

namespace rkstab {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
          const std::vector<double>& c, double eps, int budget)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        eps_(eps),
        budget_(budget),
        nonbasic_(static_cast<size_t>(n_) + 1),
        basic_(static_cast<size_t>(m_)),
        d_(static_cast<size_t>(m_) + 2, std::vector<double>(static_cast<size_t>(n_) + 2, 0.0)) {
    for (int i = 0; i < m_; ++i) {
      require(static_cast<int>(a[static_cast<size_t>(i)].size()) == n_, "LP row size mismatch");
      for (int j = 0; j < n_; ++j) at(i, j) = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      basic_[static_cast<size_t>(i)] = n_ + i;
      at(i, n_) = -1.0;
      at(i, n_ + 1) = b[static_cast<size_t>(i)];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[static_cast<size_t>(j)] = j;
      at(m_, j) = -c[static_cast<size_t>(j)];
    }
    nonbasic_[static_cast<size_t>(n_)] = -1;
    at(m_ + 1, n_) = 1.0;
  }

  LpResult solve() {
    LpResult res;
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (at(i, n_ + 1) < at(r, n_ + 1)) r = i;
    if (m_ > 0 && at(r, n_ + 1) < -eps_) {
      pivot(r, n_);
      if (!run(2) || at(m_ + 1, n_ + 1) < -eps_) {
        res.status = LpStatus::Infeasible;
        res.pivots = pivots_;
        return res;
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[static_cast<size_t>(i)] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j)
          if (better(at(i, j), nonbasic_[static_cast<size_t>(j)], at(i, s), nonbasic_[static_cast<size_t>(s)])) s = j;
        pivot(i, s);
      }
    }
    const bool bounded = run(1);
    res.x.assign(static_cast<size_t>(n_), 0.0);
    for (int i = 0; i < m_; ++i)
      if (basic_[static_cast<size_t>(i)] >= 0 && basic_[static_cast<size_t>(i)] < n_)
        res.x[static_cast<size_t>(basic_[static_cast<size_t>(i)])] = at(i, n_ + 1);
    res.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
    res.objective = bounded ? at(m_, n_ + 1) : std::numeric_limits<double>::infinity();
    res.pivots = pivots_;
    return res;
  }

 private:
  double& at(int i, int j) { return d_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  static bool better(double v, int id, double best, int best_id) {
    return v < best || (v == best && id < best_id);
  }

  void pivot(int r, int s) {
    if (++pivots_ > budget_)
      fail(ErrorCode::SolverStall, "simplex exceeded " + std::to_string(budget_) + " pivots");
    const double inv = 1.0 / at(r, s);
    auto& row_r = d_[static_cast<size_t>(r)];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(at(i, s)) <= eps_) continue;
      auto& row = d_[static_cast<size_t>(i)];
      const double f = row[static_cast<size_t>(s)] * inv;
      for (int j = 0; j < n_ + 2; ++j) row[static_cast<size_t>(j)] -= row_r[static_cast<size_t>(j)] * f;
      row[static_cast<size_t>(s)] = row_r[static_cast<size_t>(s)] * f;
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s) row_r[static_cast<size_t>(j)] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r) at(i, s) *= -inv;
    at(r, s) = inv;
    std::swap(basic_[static_cast<size_t>(r)], nonbasic_[static_cast<size_t>(s)]);
  }

  // Most negative reduced cost, until a long run of degenerate pivots
  // suggests cycling; from then on Bland's smallest-index rule, which cannot
  // cycle.
  bool run(int phase) {
    const int x = m_ + phase - 1;
    int degenerate = 0;
    bool bland = false;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        const int id = nonbasic_[static_cast<size_t>(j)];
        if (id == -phase) continue;
        if (bland) {
          if (at(x, j) < -eps_ && (s == -1 || id < nonbasic_[static_cast<size_t>(s)])) s = j;
        } else if (s == -1 || better(at(x, j), id, at(x, s), nonbasic_[static_cast<size_t>(s)])) {
          s = j;
        }
      }
      if (s == -1 || at(x, s) >= -eps_) return true;
      int r = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m_; ++i) {
        if (at(i, s) <= eps_) continue;
        const double ratio = at(i, n_ + 1) / at(i, s);
        if (r == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[static_cast<size_t>(i)] < basic_[static_cast<size_t>(r)])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r == -1) return false;
      degenerate = best_ratio <= eps_ ? degenerate + 1 : 0;
      if (degenerate > m_ + n_) bland = true;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  double eps_;
  int budget_;
  int pivots_ = 0;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> d_;
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, double eps, int max_pivots) {
  require(a.size() == b.size(), "LP: constraint matrix and rhs differ in length");
  const int budget = max_pivots > 0 ? max_pivots
                                    : 50 * (static_cast<int>(b.size()) + static_cast<int>(c.size())) + 1000;
  return Tableau(a, b, c, eps, budget).solve();
}

}  // namespace rkstab

// Reproduction checks. Each criterion prints one PASS/FAIL line; the exit
// status is nonzero if any selected criterion fails.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <rkstab/bernstein.hpp>
#include <rkstab/bounds.hpp>
#include <rkstab/optimal.hpp>
#include <rkstab/polar.hpp>
#include <rkstab/quadrature.hpp>
#include <rkstab/region.hpp>
#include <rkstab/special.hpp>

#include "../common/reference_tables.hpp"

using namespace rkstab;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail_with(const std::string& what) {
    if (pass) detail << what;
    pass = false;
  }
};

using Check = std::function<void(Verdict&)>;

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds, 0 = none
  Check run;
};

std::mt19937_64& rng() {
  static std::mt19937_64 g(20261015);
  return g;
}

double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }
int uniform_int(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng()); }

// Taylor coefficients up to order n, free coefficients perturbed around them.
Poly random_member(int m, int n) {
  std::vector<double> c(static_cast<size_t>(m) + 1);
  double f = 1.0;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) f /= j;
    c[static_cast<size_t>(j)] = j <= n ? f : f * uniform(-2.0, 2.0);
  }
  return Poly(c);
}

double choose(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

// L_k^(-m-1)(x) written out with integer binomials.
double laguerre_oracle(int k, int m, double x) {
  double s = 0.0, xl = 1.0, lf = 1.0;
  for (int l = 0; l <= k; ++l) {
    if (l > 0) {
      xl *= x;
      lf *= l;
    }
    s += choose(m - l, k - l) * xl / lf;
  }
  return (k % 2 ? -1.0 : 1.0) * s;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f) {
  std::vector<std::future<decltype(f(items.front()))>> futs;
  for (const auto& it : items) futs.push_back(std::async(std::launch::async, f, it));
  std::vector<decltype(f(items.front()))> out;
  for (auto& fu : futs) out.push_back(fu.get());
  return out;
}

// ---------------------------------------------------------------------------

void table1_upper(Verdict& v) {
  double worst = 0.0;
  for (const auto& row : reference::kDisc) {
    const double got = absolute_upper(row.m, row.n).value;
    const double err = std::abs(got - row.upper);
    worst = std::max(worst, err);
    v.detail << fmt("(%g,%g) %.4f vs %.2f; ", row.m, row.n, got, row.upper);
    if (err > 0.005) v.pass = false;
  }
  v.detail << fmt("max deviation %.4f, tolerance 0.005", worst);
}

void table1_radius(Verdict& v) {
  std::vector<reference::DiscRow> rows(std::begin(reference::kDisc), std::end(reference::kDisc));
  auto radii = parallel_map(rows, [](const reference::DiscRow& r) {
    return optimal_radius(r.m, r.n, Geometry::Disc).radius;
  });
  double worst = 0.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const double err = std::abs(radii[i] - rows[i].radius);
    worst = std::max(worst, err);
    v.detail << fmt("(%g,%g) %.4f vs %.2f; ", rows[i].m, rows[i].n, radii[i], rows[i].radius);
    if (err > 0.02) v.pass = false;
  }
  v.detail << fmt("max deviation %.4f, tolerance 0.02", worst);
}

void table2(Verdict& v) {
  double worst = 0.0;
  for (const auto& cell : reference::kLambda) {
    const double got = lambda_max(cell.m, cell.p);
    const double err = std::abs(got - cell.value);
    worst = std::max(worst, err);
    if (err > 5e-4) v.fail_with(fmt("(m,p)=(%g,%g): %.5f vs %.4f; ", cell.m, cell.p, got, cell.value));
  }
  v.detail << fmt("15 cells, max deviation %.2e, tolerance 5e-4", worst);
}

void table3(Verdict& v) {
  std::vector<reference::SegmentRow> rows(std::begin(reference::kSegment), std::end(reference::kSegment));
  auto thetas = parallel_map(rows, [](const reference::SegmentRow& r) {
    return optimal_radius(r.m, r.n, Geometry::Segment).radius;
  });
  double worst_bound = 0.0, worst_theta = 0.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double lo = parabolic_lower(r.m, r.n).value;
    const double up = parabolic_upper(r.m, r.n).value;
    const double el = std::abs(lo - r.lower), eu = std::abs(up - r.upper), et = std::abs(thetas[i] - r.theta);
    worst_bound = std::max({worst_bound, el, eu});
    worst_theta = std::max(worst_theta, et);
    if (el > 0.005) v.fail_with(fmt("(%g,%g) lower %.3f vs %.3f; ", r.m, r.n, lo, r.lower));
    if (eu > 0.005) v.fail_with(fmt("(%g,%g) upper %.3f vs %.3f; ", r.m, r.n, up, r.upper));
    if (et > 0.02) v.fail_with(fmt("(%g,%g) theta %.3f vs %.3f; ", r.m, r.n, thetas[i], r.theta));
  }
  v.detail << fmt("18 rows, bounds max deviation %.4f (tol 0.005), theta max deviation %.4f (tol 0.02)",
                  worst_bound, worst_theta);
}

void closed_forms(Verdict& v) {
  struct Job {
    int m, n;
    Geometry g;
  };
  std::vector<Job> jobs;
  for (int m = 3; m <= 8; ++m) {
    jobs.push_back({m, 1, Geometry::Disc});
    jobs.push_back({m, 2, Geometry::Disc});
  }
  for (int m = 2; m <= 6; ++m) jobs.push_back({m, 1, Geometry::Segment});
  auto res = parallel_map(jobs, [](const Job& j) { return optimal_radius(j.m, j.n, j.g); });
  double worst_r = 0.0, worst_c1 = 0.0, worst_c2 = 0.0, worst_t = 0.0;
  for (size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    const OptimalResult& r = res[i];
    if (j.g == Geometry::Segment) {
      const double want = 2.0 * j.m * j.m, err = std::abs(r.radius - want);
      worst_t = std::max(worst_t, err);
      if (err > 1e-2) v.fail_with(fmt("theta_{%g,1} = %.4f vs %g; ", j.m, r.radius, want));
      continue;
    }
    auto [phi, rad] = closed_form_optimal(j.m, j.n);
    const double err = std::abs(r.radius - rad);
    worst_r = std::max(worst_r, err);
    if (err > 1e-3) v.fail_with(fmt("r_{%g,%g} = %.5f vs %g; ", j.m, j.n, r.radius, rad));
    double ce = 0.0;
    for (int k = 0; k <= j.m; ++k) ce = std::max(ce, std::abs(r.poly.coeff(k) - phi.coeff(k)) / std::abs(phi.coeff(k)));
    if (j.n == 1) {
      worst_c1 = std::max(worst_c1, ce);
      if (ce > 1e-6) v.fail_with(fmt("(%g,1) coefficients off by %.1e; ", j.m, ce));
    } else {
      worst_c2 = std::max(worst_c2, ce);
      if (ce > 1e-5) v.fail_with(fmt("(%g,2) coefficients off by %.1e; ", j.m, ce));
    }
  }
  v.detail << fmt("radius err %.1e, order-1 coeff err %.1e, order-2 coeff err %.1e, ", worst_r, worst_c1, worst_c2)
           << fmt("segment 2m^2 err %.1e", worst_t);
}

void identity_lower_twice_disc(Verdict& v) {
  double worst = 0.0;
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= m; ++n) {
      const double a = absolute_upper(m, n).value, l = parabolic_lower(m, n).value;
      const double err = std::abs(l - 2.0 * a);
      worst = std::max(worst, err);
      if (err > 1e-10) v.fail_with(fmt("(%g,%g): lower %.15g vs 2*%.15g; ", m, n, l, a));
    }
  v.detail << fmt("78 pairs, max |lower - 2 upper_disc| = %.1e", worst);
}

void blossom_laguerre(Verdict& v) {
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = uniform_int(1, 12), n = uniform_int(1, m), k = uniform_int(1, n);
    const double z = uniform(-20.0, 5.0);
    const Blossom b(random_member(m, n), m);
    std::vector<double> args(static_cast<size_t>(m), 0.0);
    std::fill(args.begin(), args.begin() + k, z);
    const double got = b(std::span<const double>(args));
    const double want = (k % 2 ? -1.0 : 1.0) / choose(m, k) * laguerre_oracle(k, m, z);
    const double err = std::abs(got - want) / std::max(1.0, std::abs(want));
    worst = std::max(worst, err);
    if (err > 1e-8) v.fail_with(fmt("m=%g n=%g k=%g z=%.3f; ", m, n, k, z));
  }
  v.detail << fmt("10000 trials, max relative error %.1e", worst);
}

void quadrature_exactness(Verdict& v) {
  double worst = 0.0;
  for (const auto& cell : reference::kLambda) {
    const QuadRule q = gauss_rule(cell.m, cell.p);
    for (int k = 0; k <= 2 * cell.p - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < cell.p; ++i) s += q.weights[static_cast<size_t>(i)] * std::pow(q.nodes[static_cast<size_t>(i)], k);
      const double want = static_cast<double>(cell.m) / (cell.m - k);
      const double err = std::abs(s - want) / want;
      worst = std::max(worst, err);
      if (err > 1e-9) v.fail_with(fmt("(m,p)=(%g,%g) k=%g: %.3e; ", cell.m, cell.p, k, err));
    }
  }
  double worst_member = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int p = uniform_int(1, 3);
    const int n = uniform_int(2 * p - 1, 2 * p + 2);
    const int m = uniform_int(std::max(n, 2 * p), 12);
    const Poly P = random_member(m, n);
    const QuadRule q = gauss_rule(m, p);
    const Blossom b(P, m);
    Poly sum = Poly::constant(0.0).with_degree_bound(m - 1);
    for (int i = 0; i < p; ++i) sum += q.weights[static_cast<size_t>(i)] * b.repeat(q.nodes[static_cast<size_t>(i)], m - 1);
    for (int k = 0; k <= 2 * p - 1; ++k) worst_member = std::max(worst_member, std::abs(sum.derivative(k)(0.0) - 1.0));
  }
  if (worst_member > 1e-8) v.fail_with(fmt("membership error %.1e; ", worst_member));
  v.detail << fmt("moment error %.1e over the Table 2 rules, membership error %.1e over 100 polynomials", worst,
                  worst_member);
}

void damping_reduction(Verdict& v) {
  double worst = 0.0;
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= m; ++n) {
      const double d = damped_parabolic_upper(m, n, 0.0, 0.0).value, p = parabolic_upper(m, n).value;
      const double err = std::abs(d - p) / std::max(1.0, p);
      worst = std::max(worst, err);
      if (err > 1e-9) v.fail_with(fmt("(%g,%g): %.12g vs %.12g; ", m, n, d, p));
    }
  v.detail << fmt("55 pairs, max relative deviation %.1e", worst);
}

void limit_caps(Verdict& v) {
  const std::map<int, double> printed = {{2, 1.1547}, {3, 0.8109}, {4, 0.6205}};
  for (const auto& [n, want] : printed) {
    const double got = parabolic_limit_cap(n);
    v.detail << fmt("cap(%g) = %.4f vs %.4f; ", n, got, want);
    if (std::abs(got - want) > 5e-4) v.pass = false;
  }
  std::vector<reference::SegmentRow> rows(std::begin(reference::kSegment), std::end(reference::kSegment));
  auto thetas = parallel_map(rows, [](const reference::SegmentRow& r) {
    return optimal_radius(r.m, r.n, Geometry::Segment).radius;
  });
  double worst = -1.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const double ratio = thetas[i] / (rows[i].m * rows[i].m);
    const double cap = parabolic_limit_cap(rows[i].n);
    worst = std::max(worst, ratio - cap);
    if (ratio > cap) v.fail_with(fmt("theta/m^2 = %.4f above cap %.4f at (%g,%g); ", ratio, cap, rows[i].m, rows[i].n));
  }
  v.detail << fmt("max theta/m^2 - cap over Table 3 = %.4f", worst);
}

void inequality_chain(Verdict& v) {
  struct Cell {
    int m, n;
  };
  std::vector<Cell> cells;
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= std::min(m, 5); ++n) cells.push_back({m, n});
  auto disc = parallel_map(cells, [](const Cell& c) { return optimal_radius(c.m, c.n, Geometry::Disc); });
  auto thr = parallel_map(cells, [](const Cell& c) {
    return c.m > c.n ? threshold_factor(c.m, c.n) : OptimalResult{};
  });
  auto index = [&](int m, int n) {
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].m == m && cells[i].n == n) return i;
    return cells.size();
  };
  int checked = 0;
  for (size_t i = 0; i < cells.size(); ++i) {
    const int m = cells[i].m, n = cells[i].n;
    const OptimalResult& r = disc[i];
    if (m > n) {
      ++checked;
      if (thr[i].radius > r.radius + r.bisection_width)
        v.fail_with(fmt("R_{%g,%g} = %.4f above r = %.4f; ", m, n, thr[i].radius, r.radius));
    }
    for (int p = 1; 2 * p - 1 <= n && 2 * p - 1 < m; ++p) {
      const OptimalResult& prev = disc[index(m - 1, 2 * p - 1)];
      const double bound = lambda_max(m, p) * (prev.radius + prev.bisection_width);
      ++checked;
      if (r.radius > bound)
        v.fail_with(fmt("r_{%g,%g} = %.4f above %.4f", m, n, r.radius, bound) + " (p = " + std::to_string(p) + "); ");
    }
  }
  v.detail << checked << " inequalities on m <= 7, n <= 5, slack = bisection width";
}

void lubinsky_ziegler(Verdict& v) {
  std::vector<reference::SegmentRow> rows(std::begin(reference::kSegment), std::end(reference::kSegment));
  auto res = parallel_map(rows, [](const reference::SegmentRow& r) {
    return optimal_radius(r.m, r.n, Geometry::Segment);
  });
  double worst = -1.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const int m = rows[i].m;
    const auto cheb = chebyshev_bernstein_ordinates(m);
    const auto poly = control_polygon(res[i].poly, Interval(-res[i].radius, 0.0), m);
    for (int k = 0; k <= m; ++k) {
      const double excess = std::abs(poly[static_cast<size_t>(k)].second) - std::abs(cheb[static_cast<size_t>(k)]);
      worst = std::max(worst, excess);
      if (excess > 1e-7) v.fail_with(fmt("(%g,%g) ordinate %g exceeds by %.1e; ", m, rows[i].n, k, excess));
    }
  }
  v.detail << fmt("18 cells, max |q_k| - |c_k| = %.1e (slack 1e-7)", worst);
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Table 1 upper bounds", 1.0, table1_upper},
      {2, "Table 1 optimal radii", 60.0, table1_radius},
      {3, "Table 2 largest nodes", 1.0, table2},
      {4, "Table 3 bounds and parabolic radii", 120.0, table3},
      {5, "closed-form optima", 0.0, closed_forms},
      {6, "lower bound is twice the disc bound", 0.0, identity_lower_twice_disc},
      {7, "blossom at a repeated point", 0.0, blossom_laguerre},
      {8, "quadrature exactness and membership", 0.0, quadrature_exactness},
      {9, "damped bound reduction", 0.0, damping_reduction},
      {10, "limit caps", 0.0, limit_caps},
      {11, "inequality chain", 0.0, inequality_chain},
      {12, "Chebyshev domination of control polygons", 0.0, lubinsky_ziegler},
  };
  return all;
}

bool run(const Criterion& c) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(v);
  } catch (const std::exception& e) {
    v.fail_with(std::string("exception: ") + e.what() + "; ");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.time_limit > 0.0 && secs > c.time_limit) v.fail_with(fmt("time %.1f s over limit %.0f s; ", secs, c.time_limit));
  std::printf("%s criterion %d (%s): %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", c.id, c.title, v.detail.str().c_str(),
              secs);
  std::fflush(stdout);
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reproduction checks"};
  int which = 0;
  app.add_option("--criterion", which, "Run one criterion (1-12); all when omitted")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  for (const auto& c : criteria())
    if (which == 0 || c.id == which) ok = run(c) && ok;
  return ok ? 0 : 1;
}

#include <doctest.h>

#include <map>
#include <mutex>

#include <rkstab/bernstein.hpp>
#include <rkstab/bounds.hpp>
#include <rkstab/error.hpp>
#include <rkstab/optimal.hpp>
#include <rkstab/quadrature.hpp>
#include <rkstab/special.hpp>

#include "support.hpp"

using namespace rkstab;
using testing::uniform;

namespace {

const OptimalResult& cached(int m, int n, Geometry g) {
  static std::map<std::tuple<int, int, Geometry>, OptimalResult> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(m, n, g);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, g == Geometry::Threshold ? threshold_factor(m, n) : optimal_radius(m, n, g)).first;
  }
  return it->second;
}

double disc(int m, int n) { return cached(m, n, Geometry::Disc).radius; }
double segment(int m, int n) { return cached(m, n, Geometry::Segment).radius; }
double threshold(int m, int n) { return cached(m, n, Geometry::Threshold).radius; }

}  // namespace

TEST_CASE("disc feasibility at known radii") {
  for (int m = 2; m <= 5; ++m) {
    FeasibilityProblem fp{m, 1, static_cast<double>(m), Geometry::Disc};
    FeasibilityOutcome out = feasible(fp);
    CHECK(out.feasible);
    auto [phi, r] = closed_form_optimal(m, 1);
    for (int k = 0; k <= m; ++k) CHECK(out.poly.coeff(k) == doctest::Approx(phi.coeff(k)).epsilon(1e-6));
  }
  FeasibilityProblem over{4, 3, 2.20, Geometry::Disc};
  CHECK_FALSE(feasible(over).feasible);
  CHECK_THROWS_AS(feasible(FeasibilityProblem{4, 3, -1.0, Geometry::Disc}), Error);
}

TEST_CASE("segment feasibility around the optimum") {
  CHECK(feasible(FeasibilityProblem{6, 3, 16.0, Geometry::Segment}).feasible);
  CHECK_FALSE(feasible(FeasibilityProblem{6, 3, 16.1, Geometry::Segment}).feasible);
}

TEST_CASE("segment feasibility is monotone below the optimum") {
  // Crowded exchange points once produced spurious infeasible answers here.
  int rejected = 0;
  for (double r = 57.19; r <= 57.32; r += 0.005)
    rejected += feasible(FeasibilityProblem{13, 4, r, Geometry::Segment}).feasible ? 0 : 1;
  CHECK(rejected == 0);
  CHECK(segment(13, 4) == doctest::Approx(57.324).epsilon(0.02 / 57.324));
}

TEST_CASE("second-order disc optimum is known in closed form") {
  for (int m = 3; m <= 5; ++m) {
    const OptimalResult& r = cached(m, 2, Geometry::Disc);
    CHECK(r.radius == doctest::Approx(m - 1.0).epsilon(1e-3 / (m - 1)));
    auto [phi, rad] = closed_form_optimal(m, 2);
    for (int k = 0; k <= m; ++k) CHECK(r.poly.coeff(k) == doctest::Approx(phi.coeff(k)).epsilon(1e-6));
  }
}

TEST_CASE("optimal radii at selected cells") {
  CHECK(disc(6, 4) == doctest::Approx(3.06).epsilon(0.01 / 3.06));
  CHECK(segment(8, 4) == doctest::Approx(19.929).epsilon(0.01 / 19.929));
}

TEST_CASE("optimal polynomials satisfy the order conditions and the modulus bound") {
  for (auto [m, n] : {std::pair{4, 3}, {5, 3}, {6, 4}, {5, 2}}) {
    const OptimalResult& r = cached(m, n, Geometry::Disc);
    INFO("disc m=" << m << " n=" << n);
    CHECK(r.poly.in_class(m, n, 1e-9));
    CHECK(testing::circle_max(r.poly, r.radius, 5120) <= 1.0 + 1e-7);
    CHECK(r.radius >= r.bracket_lo);
    CHECK(r.radius <= r.bracket_hi);
    CHECK(r.radius <= absolute_upper(m, n).value + 1e-12);
  }
  for (auto [m, n] : {std::pair{6, 3}, {8, 4}, {5, 4}}) {
    const OptimalResult& r = cached(m, n, Geometry::Segment);
    INFO("segment m=" << m << " n=" << n);
    CHECK(r.poly.in_class(m, n, 1e-9));
    CHECK(testing::segment_max(r.poly, -r.radius, 0.0, 60 * (m + 1) * 10) <= 1.0 + 1e-7);
    CHECK(r.radius >= parabolic_lower(m, n).value - 1e-12);
    CHECK(r.radius <= parabolic_upper(m, n).value + 1e-12);
  }
}

TEST_CASE("contact points of disc optima") {
  for (int m = 1; m <= 5; ++m) {
    const OptimalResult& r = cached(m, 1, Geometry::Disc);
    CHECK(r.radius == doctest::Approx(m).epsilon(1e-3 / m));
    auto pts = touch_points(r, 1e-4);
    CHECK(std::any_of(pts.begin(), pts.end(), [](Complex z) { return std::abs(z) < 1e-12; }));
  }
  // The contact structure is only resolved once the radius is close enough
  // to optimal that the peaks sit within the tolerance of 1.
  OptimalOptions fine;
  fine.bisection_width = 1e-5;
  OptimalResult r53 = optimal_radius(5, 3, Geometry::Disc, fine);
  auto pts = touch_points(r53, 1e-4);
  CHECK(pts.size() >= 4);
  CHECK(r53.touch_points.size() >= 4);
}

TEST_CASE("parabolic optimum equioscillates") {
  // The left end only reaches the level as the bracket closes, so bisect tightly.
  OptimalOptions fine;
  fine.bisection_width = 1e-7;
  const OptimalResult r = optimal_radius(6, 3, Geometry::Segment, fine);
  int count = alternation_count(r.poly, Interval(-r.radius, 0.0), 1.0, 1e-5);
  CHECK(count >= 6 - 3 + 2);
}

TEST_CASE("threshold factors") {
  for (int m = 2; m <= 6; ++m) CHECK(threshold(m, 1) == doctest::Approx(m).epsilon(1e-3 / m));
  for (int m = 3; m <= 9; ++m) {
    for (int n = 1; n <= std::min(4, m - 1); ++n) {
      INFO("m=" << m << " n=" << n);
      const OptimalResult& r = cached(m, n, Geometry::Threshold);
      ThresholdBracket b = threshold_upper_lower(m, n);
      CHECK(r.radius <= m - n + 1 + 1e-3);
      CHECK(r.radius >= b.lo - 1e-3);
      CHECK(r.radius <= b.hi + 1e-3);
      CHECK(r.poly.in_class(m, n, 1e-9));
      double total = 0.0;
      for (double c : r.nonneg_coeffs) {
        CHECK(c >= -1e-12);
        total += c;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
      // All derivatives nonnegative across [-R, 0].
      for (int k = 0; k <= m; ++k) {
        Poly d = r.poly.derivative(k);
        for (int s = 0; s <= 50; ++s) CHECK(d(-r.radius * s / 50.0) >= -1e-9);
      }
    }
  }
  // Even order costs one stage relative to the odd order below it.
  CHECK(threshold(7, 4) == doctest::Approx(threshold(6, 3)).epsilon(1e-3));
  CHECK_THROWS_AS(threshold_factor(3, 3), Error);
}

TEST_CASE("threshold factor never exceeds the disc radius") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= std::min(4, m - 1); ++n) {
      INFO("m=" << m << " n=" << n);
      CHECK(threshold(m, n) <= disc(m, n) + 1e-3);
    }
}

TEST_CASE("adding a stage grows the radius by at most the largest node") {
  for (int m : {5, 6, 7}) {
    INFO("m=" << m);
    double lam = lambda_max(m, 2);
    CHECK(disc(m, 3) <= lam * disc(m - 1, 3) + 2e-3);
    CHECK(threshold(m, 3) <= lam * threshold(m - 1, 3) + 2e-3);
  }
  Interval br = stage_inequality(7, 5, 3, disc(6, 5));
  CHECK(disc(7, 5) >= br.lo() - 1e-3);
  CHECK(disc(7, 5) <= br.hi() + 1e-3);
}

TEST_CASE("radii are monotone in stages and order") {
  for (int m = 4; m <= 6; ++m) CHECK(disc(m + 1, 3) >= disc(m, 3) - 1e-3);
  CHECK(disc(6, 3) >= disc(6, 4) - 1e-3);
  CHECK(disc(6, 4) >= disc(6, 5) - 1e-3);
  for (int m = 5; m <= 8; ++m) {
    CHECK(segment(m + 1, 3) >= segment(m, 3) - 1e-3);
    CHECK(segment(m, 3) >= segment(m, 4) - 1e-3);
  }
}

TEST_CASE("explicit lower-bound polynomial stays bounded") {
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; n <= m; ++n) {
      INFO("m=" << m << " n=" << n);
      double eta = -parabolic_lower(m, n).value;
      // Ordinate k belongs to the blossom with k slots at eta; over
      // (eta, 0) that is index m - k.
      std::vector<double> ord(static_cast<size_t>(m) + 1, 0.0);
      for (int k = 0; k <= n; ++k)
        ord[static_cast<size_t>(m - k)] = (k % 2 ? -1.0 : 1.0) / binomial(m, k) * laguerre_neg(k, -m - 1.0, eta);
      Poly q = from_bernstein(BernsteinForm(Interval(eta, 0.0), ord));
      CHECK(q.in_class(m, n, 1e-9));
      CHECK(testing::segment_max(q, eta, 0.0, 20000) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("truncated ordinates at higher degree stay bounded") {
  for (int trial = 0; trial < 100; ++trial) {
    int n = testing::uniform_int(1, 6), m = n + testing::uniform_int(0, 6);
    double a = uniform(-10, 0);
    Interval iv(a, a + uniform(0.5, 10));
    std::vector<double> c(static_cast<size_t>(n) + 1);
    for (auto& v : c) v = uniform(-1, 1);
    Poly p(c);
    // Normalize by the true maximum: grid scan refined by the derivative zeros.
    double sup = std::max(std::abs(p(iv.lo())), std::abs(p(iv.hi())));
    Poly dp = p.derivative();
    const int grid = 2000;
    for (int k = 0; k < grid; ++k) {
      double lo = iv.lo() + iv.width() * k / grid, hi = iv.lo() + iv.width() * (k + 1) / grid;
      if ((dp(lo) > 0) == (dp(hi) > 0)) continue;
      for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        ((dp(mid) > 0) == (dp(lo) > 0) ? lo : hi) = mid;
      }
      sup = std::max(sup, std::abs(p(0.5 * (lo + hi))));
    }
    Poly q = p * (1.0 / sup);
    BernsteinForm bf = to_bernstein(q, iv, n);
    std::vector<double> ord(static_cast<size_t>(m) + 1, 0.0);
    std::copy(bf.ordinates().begin(), bf.ordinates().end(), ord.begin());
    BernsteinForm high(iv, ord);
    double worst = 0.0;
    for (int k = 0; k <= 5000; ++k) worst = std::max(worst, std::abs(high(iv.lo() + iv.width() * k / 5000)));
    CHECK(worst <= 1.0 + 1e-9);
  }
}

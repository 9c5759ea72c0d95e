#include <doctest.h>

#include <rkstab/bernstein.hpp>
#include <rkstab/error.hpp>
#include <rkstab/polar.hpp>
#include <rkstab/special.hpp>

#include "support.hpp"

using namespace rkstab;
using testing::uniform;

namespace {

double rising(double a, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

double g_direct(int n, double alpha, double y) {
  double s = 0.0;
  for (int i = 0; i <= n; ++i) s += binomial(n, i) * rising(alpha, i) * std::pow(y, n - i);
  return s;
}

int sign_changes(const Poly& p, double lo, double hi, int grid) {
  int changes = 0;
  double prev = p(lo);
  for (int k = 1; k <= grid; ++k) {
    double v = p(lo + (hi - lo) * k / grid);
    if (v == 0.0) continue;
    if (prev != 0.0 && (v > 0) != (prev > 0)) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace

TEST_CASE("Pochhammer symbols and generalized binomials") {
  PochhammerTable t(2.5, 6);
  CHECK(t[0] == 1.0);
  for (int i = 0; i < 6; ++i) CHECK(t[i + 1] == doctest::Approx(t[i] * (2.5 + i)));
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(generalized_binomial(-3.0, 2) == doctest::Approx(6.0));
  CHECK(generalized_binomial(0.5, 3) == doctest::Approx(0.0625));
  CHECK(generalized_binomial(7.0, 3) == doctest::Approx(35.0));
  CHECK(generalized_binomial(4.0, -1) == 0.0);
}

TEST_CASE("Laguerre polynomials with negative parameter") {
  for (double g : {-7.0, -2.5, 0.0, 3.0}) {
    Poly l0 = laguerre_poly(0, g);
    CHECK(l0.degree_bound() == 0);
    CHECK(l0.coeff(0) == 1.0);
  }
  for (int m = 1; m <= 10; ++m) {
    for (double x : {-4.0, 0.0, 2.5}) CHECK(laguerre_neg(1, -m - 1.0, x) == doctest::Approx(-m - x));
  }
  // Classical case: L_2^(a)(x) = ((a+1)(a+2) - 2(a+2)x + x^2) / 2.
  for (double a : {0.0, 1.5}) {
    double x = 0.7;
    CHECK(laguerre_neg(2, a, x) == doctest::Approx(((a + 1) * (a + 2) - 2 * (a + 2) * x + x * x) / 2));
  }
  Complex z(1.0, 2.0);
  Complex direct = -3.0 - z;
  CHECK(std::abs(laguerre_neg(1, -4.0, z) - direct) < 1e-14);

  for (int trial = 0; trial < 200; ++trial) {
    int n = testing::uniform_int(1, 8);
    double a = uniform(0.5, 6.0), x = uniform(-10, 10);
    double lhs = g_direct(n, a, x);
    double rhs = (n % 2 ? -1.0 : 1.0) * factorial(n) * laguerre_neg(n, -a - n, x);
    CHECK(rhs == doctest::Approx(lhs).epsilon(1e-10));
  }
}

TEST_CASE("G polynomials") {
  Poly g1 = g_poly(1, 3.5);
  CHECK(g1.coeff(0) == 3.5);
  CHECK(g1.coeff(1) == 1.0);
  Poly g2 = g_poly(2, 1.0);
  CHECK(g2.coeff(0) == doctest::Approx(2.0));
  CHECK(g2.coeff(1) == doctest::Approx(2.0));
  CHECK(g2.coeff(2) == doctest::Approx(1.0));
  for (double a : {0.3, 1.0, 4.0}) {
    Poly g3 = g_poly(3, a);
    CHECK(g3.coeff(3) == 1.0);
    CHECK(sign_changes(g3, -60, 60, 200000) == 1);
    CHECK(sign_changes(g3, 0, 60, 20000) == 0);
  }
  CHECK_THROWS_AS(g_poly(0, 1.0), Error);
  CHECK_THROWS_AS(g_poly(2, 0.0), Error);
}

TEST_CASE("G polynomials of even order are positive, odd order have one real zero") {
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 * testing::uniform_int(1, 4);
    double a = uniform(0.1, 6.0);
    CHECK(g_poly(n, a)(uniform(-30, 30)) > 0.0);
  }
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 * testing::uniform_int(0, 3) + 1;
    double a = uniform(0.1, 6.0);
    CHECK(sign_changes(g_poly(n, a), -80, 80, 100000) == 1);
  }
}

TEST_CASE("R polynomials") {
  Poly r = r_poly(1, 1.0, 1.0);
  CHECK(r.coeff(0) == doctest::Approx(2.0));
  CHECK(r.coeff(1) == doctest::Approx(1.0));

  for (int trial = 0; trial < 50; ++trial) {
    int n = testing::uniform_int(1, 7);
    double a = uniform(0.2, 4.0);
    double beta = rising(a, n) * uniform(1.0, 5.0);
    Poly rn = r_poly(n, a, beta);
    CHECK(rn(0.0) == doctest::Approx(beta - (n % 2 ? -1.0 : 1.0) * rising(a, n)));
    if (n >= 2) {
      double y = uniform(-5, 3), h = 1e-5;
      double fd = (rn(y + h) - rn(y - h)) / (2 * h);
      double expect = (n % 2 ? 1.0 : -1.0) * n * g_poly(n - 1, a)(y);
      CHECK(fd == doctest::Approx(expect).epsilon(1e-6));
    }
  }
  CHECK_THROWS_AS(r_poly(3, 1.0, 5.0), Error);
}

TEST_CASE("shifted Chebyshev polynomials") {
  Poly t1 = chebyshev_shifted(1, Interval(-1, 1));
  CHECK(t1.coeff(0) == doctest::Approx(0.0));
  CHECK(t1.coeff(1) == doctest::Approx(1.0));

  auto ord = chebyshev_bernstein_ordinates(3);
  std::vector<double> expect{-1.0, 5.0, -5.0, 1.0};
  for (int i = 0; i < 4; ++i) CHECK(ord[i] == doctest::Approx(expect[i]));
  for (int m = 1; m <= 10; ++m) {
    Interval iv(-2.0 * m * m, 0.0);
    BernsteinForm bf = to_bernstein(chebyshev_shifted(m, iv), iv, m);
    auto closed = chebyshev_bernstein_ordinates(m);
    for (int i = 0; i <= m; ++i) CHECK(bf.ordinates()[i] == doctest::Approx(closed[i]).epsilon(1e-9));
  }

  Poly th = chebyshev_shifted(5, Interval(-50, 0));
  CHECK(testing::segment_max(th, -50, 0, 20000) <= 1.0 + 1e-12);
  CHECK(th(0.0) == doctest::Approx(1.0));
  CHECK(th.coeff(1) == doctest::Approx(1.0));
}

TEST_CASE("shifted Chebyshev polynomials equioscillate") {
  for (int m = 1; m <= 9; ++m) {
    Interval iv(uniform(-30, -5), uniform(-1, 2));
    Poly t = chebyshev_shifted(m, iv);
    Poly dt = t.derivative();
    std::vector<double> extrema{iv.lo()};
    const int grid = 4000;
    for (int k = 0; k < grid; ++k) {
      double a = iv.lo() + iv.width() * k / grid, b = iv.lo() + iv.width() * (k + 1) / grid;
      if ((dt(a) > 0) == (dt(b) > 0)) continue;
      for (int it = 0; it < 80; ++it) {
        double c = 0.5 * (a + b);
        ((dt(c) > 0) == (dt(a) > 0) ? a : b) = c;
      }
      extrema.push_back(0.5 * (a + b));
    }
    extrema.push_back(iv.hi());
    REQUIRE(extrema.size() == static_cast<size_t>(m) + 1);
    for (size_t i = 0; i < extrema.size(); ++i) {
      double expect = ((m - static_cast<int>(i)) % 2 ? -1.0 : 1.0);
      CHECK(std::abs(t(extrema[i]) - expect) <= 1e-8);
    }
  }
}

TEST_CASE("Chebyshev blossom with pinned slots") {
  Interval iv(-18.0, 0.0);
  for (int m = 1; m <= 6; ++m) {
    CHECK(chebyshev_blossom_tail(m, m, iv, -3.0) == doctest::Approx(m % 2 ? -1.0 : 1.0));
    for (int n = 0; n <= m; ++n)
      CHECK(chebyshev_blossom_tail(m, n, iv, iv.lo()) == doctest::Approx(m % 2 ? -1.0 : 1.0));
  }
  // Degree one: the only slot is pinned, so the value is T_1 at the left end.
  CHECK(chebyshev_blossom_tail(1, 1, Interval(-2.0, 0.0), 0.0) == doctest::Approx(-1.0));
  CHECK(chebyshev_blossom_tail(1, 0, Interval(-2.0, 0.0), 0.0) == doctest::Approx(1.0));

  for (int trial = 0; trial < 100; ++trial) {
    int m = testing::uniform_int(1, 10), n = testing::uniform_int(0, m);
    Interval jv(uniform(-40, -5), uniform(-1, 1));
    double x = uniform(jv.lo(), jv.hi());
    Blossom b(chebyshev_shifted(m, jv), m);
    std::vector<double> args(static_cast<size_t>(m), x);
    std::fill(args.begin(), args.begin() + n, jv.lo());
    CHECK(chebyshev_blossom_tail(m, n, jv, x) == doctest::Approx(b(std::span<const double>(args))).epsilon(1e-8));
  }
}

TEST_CASE("smallest zero of classical Laguerre polynomials") {
  for (double nu : {0.0, 0.5, 3.0, 9.0}) {
    CHECK(laguerre_smallest_zero(1, nu) == doctest::Approx(nu + 1.0));
    CHECK(laguerre_smallest_zero(2, nu) == doctest::Approx(nu + 2.0 - std::sqrt(nu + 2.0)));
  }
  for (int p = 3; p <= 5; ++p) {
    double z = laguerre_smallest_zero(p, 2.0);
    Poly l = laguerre_poly(p, 2.0);
    CHECK(std::abs(l(z)) < 1e-10);
    CHECK(sign_changes(l, 0.0, z - 1e-9, 10000) == 0);
  }
}

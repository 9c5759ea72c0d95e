#include "rkstab/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rkstab/error.hpp"
#include "rkstab/polar.hpp"

namespace rkstab {

BernsteinForm::BernsteinForm(Interval iv, std::vector<double> ordinates)
    : iv_(iv), ordinates_(std::move(ordinates)) {
  require(!ordinates_.empty(), "Bernstein form needs at least one ordinate");
}

double BernsteinForm::operator()(double x) const {
  const double t = (x - iv_.lo()) / iv_.width();
  std::vector<double> work(ordinates_);
  for (size_t r = 1; r < work.size(); ++r)
    for (size_t i = 0; i + r < work.size(); ++i) work[i] = (1.0 - t) * work[i] + t * work[i + 1];
  return work[0];
}

std::vector<std::pair<double, double>> BernsteinForm::control_polygon() const {
  const int n = degree();
  std::vector<std::pair<double, double>> pts;
  pts.reserve(ordinates_.size());
  for (int i = 0; i <= n; ++i) {
    const double x = n == 0 ? iv_.lo() : iv_.lo() + i * iv_.width() / n;
    pts.emplace_back(x, ordinates_[static_cast<size_t>(i)]);
  }
  return pts;
}

BernsteinForm BernsteinForm::elevate(int k) const {
  require(k >= 0, "elevation count must be non-negative");
  std::vector<double> q(ordinates_);
  for (int step = 0; step < k; ++step) {
    const int n = static_cast<int>(q.size()) - 1;
    std::vector<double> e(q.size() + 1);
    e.front() = q.front();
    e.back() = q.back();
    for (int i = 1; i <= n; ++i) {
      const double w = static_cast<double>(i) / (n + 1);
      e[static_cast<size_t>(i)] = w * q[static_cast<size_t>(i - 1)] + (1.0 - w) * q[static_cast<size_t>(i)];
    }
    q = std::move(e);
  }
  return BernsteinForm(iv_, std::move(q));
}

BernsteinForm to_bernstein(const Poly& p, const Interval& iv, int N) {
  require(N >= p.degree(), "to_bernstein: N = " + std::to_string(N) +
                               " is below the polynomial degree " + std::to_string(p.degree()));
  const Blossom b(p, N);
  std::vector<double> q(static_cast<size_t>(N) + 1);
  std::vector<double> args(static_cast<size_t>(N));
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; j < N; ++j) args[static_cast<size_t>(j)] = j < N - i ? iv.lo() : iv.hi();
    q[static_cast<size_t>(i)] = b(std::span<const double>(args));
  }
  return BernsteinForm(iv, std::move(q));
}

namespace {

Poly taylor_from_bernstein(const BernsteinForm& bf) {
  // Taylor coefficients at the point x0 of [a, b] nearest the origin, taken
  // from finite differences of the ordinates of the longer sub-piece at x0
  // (de Casteljau split). Expanding at x0 instead of at a avoids the large
  // cancelling terms of a Taylor shift across the whole interval.
  const auto& iv = bf.interval();
  const int n = bf.degree();
  const double x0 = std::clamp(0.0, iv.lo(), iv.hi());
  const double t0 = (x0 - iv.lo()) / iv.width();

  std::vector<double> work(bf.ordinates());
  std::vector<double> left(work.size()), right(work.size());
  left[0] = work[0];
  right[static_cast<size_t>(n)] = work[static_cast<size_t>(n)];
  for (int r = 1; r <= n; ++r) {
    for (int i = 0; i + r <= n; ++i)
      work[static_cast<size_t>(i)] = (1.0 - t0) * work[static_cast<size_t>(i)] + t0 * work[static_cast<size_t>(i + 1)];
    left[static_cast<size_t>(r)] = work[0];
    right[static_cast<size_t>(n - r)] = work[static_cast<size_t>(n - r)];
  }

  // Differences taken away from x0: forward on the right piece, backward
  // (reversed, with alternating sign) on the left one.
  const bool use_right = iv.hi() - x0 >= x0 - iv.lo();
  const double h = use_right ? iv.hi() - x0 : x0 - iv.lo();
  std::vector<double> diff = use_right ? right : std::vector<double>(left.rbegin(), left.rend());
  std::vector<double> c(static_cast<size_t>(n) + 1);
  double scale = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = use_right || k % 2 == 0 ? 1.0 : -1.0;
    c[static_cast<size_t>(k)] = sign * binomial(n, k) * diff[0] / scale;
    scale *= h;
    for (int i = 0; i + 1 < static_cast<int>(diff.size()) - k; ++i)
      diff[static_cast<size_t>(i)] = diff[static_cast<size_t>(i + 1)] - diff[static_cast<size_t>(i)];
  }
  Poly taylor(std::move(c));
  return x0 == 0.0 ? taylor : taylor.compose_affine(-x0, 1.0);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

Poly from_bernstein(const BernsteinForm& bf) {
  // The forward conversion is accurate to rounding, so a few rounds of
  // iterative refinement against it recover most of what the differencing
  // loses. A round is kept only if it shrinks the ordinate residual.
  Poly p = taylor_from_bernstein(bf);
  const int n = bf.degree();
  double res = max_abs_diff(to_bernstein(p, bf.interval(), n).ordinates(), bf.ordinates());
  for (int round = 0; round < 3 && res > 0.0; ++round) {
    const auto back = to_bernstein(p, bf.interval(), n).ordinates();
    std::vector<double> r(bf.ordinates());
    for (size_t i = 0; i < r.size(); ++i) r[i] -= back[i];
    Poly next = p + taylor_from_bernstein(BernsteinForm(bf.interval(), r));
    const double next_res = max_abs_diff(to_bernstein(next, bf.interval(), n).ordinates(), bf.ordinates());
    if (!(next_res < res)) break;
    p = std::move(next);
    res = next_res;
  }
  return p;
}

}  // namespace rkstab

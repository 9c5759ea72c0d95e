#pragma once

#include <utility>
#include <vector>

#include "rkstab/poly.hpp"

namespace rkstab {

/// Polynomial given by control ordinates q_0..q_N over (a, b):
///   P(x) = sum_i q_i C(N,i) ((b-x)/(b-a))^(N-i) ((x-a)/(b-a))^i.
class BernsteinForm {
 public:
  BernsteinForm(Interval iv, std::vector<double> ordinates);

  const Interval& interval() const { return iv_; }
  int degree() const { return static_cast<int>(ordinates_.size()) - 1; }
  const std::vector<double>& ordinates() const { return ordinates_; }

  /// de Casteljau evaluation.
  double operator()(double x) const;

  /// Vertices (a + i(b-a)/N, q_i) of the control polygon of (t, P(t)).
  std::vector<std::pair<double, double>> control_polygon() const;

  /// Same ordinates re-expressed at degree N+k.
  BernsteinForm elevate(int k = 1) const;

 private:
  Interval iv_;
  std::vector<double> ordinates_;
};

/// Ordinates q_i = blossom(a^[N-i], b^[i]) of p viewed at degree N.
/// Throws InvalidArgument when N is below the exact degree of p.
BernsteinForm to_bernstein(const Poly& p, const Interval& iv, int N);

Poly from_bernstein(const BernsteinForm& bf);

}  // namespace rkstab

#pragma once

#include <span>
#include <vector>

#include "rkstab/poly.hpp"

namespace rkstab {

/// sigma_0..sigma_upto of the given values, by the one-pass recurrence
/// sigma_k <- sigma_k + u * sigma_{k-1}.
std::vector<Complex> elementary_symmetric(std::span<const Complex> values, int upto);

/// Polar form (blossom) of a polynomial viewed at a declared degree m: the
/// symmetric, multi-affine function of m arguments whose diagonal is p.
///
///   blossom(u_1..u_m) = sum_k a_k sigma_k(u_1..u_m) / C(m, k)
class Blossom {
 public:
  Blossom(Poly base, int degree);

  const Poly& base() const { return base_; }
  int degree() const { return degree_; }

  Complex operator()(std::span<const Complex> args) const;
  double operator()(std::span<const double> args) const;

  /// z -> blossom((scale z)^[count], 0^[degree - count]) as a polynomial of
  /// degree bound `count`. Closed form: the z^l coefficient is
  /// a_l C(count, l) / C(degree, l) scale^l.
  Poly repeat(double scale, int count) const;

 private:
  Poly base_;
  int degree_;
};

}  // namespace rkstab

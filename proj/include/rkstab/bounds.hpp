#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rkstab/poly.hpp"

namespace rkstab {

enum class BoundKind { Upper, Lower };

/// A bound value together with how it was obtained, so it can be re-derived
/// from the JSON alone: the root equation's monomial coefficients are kept.
struct BoundReport {
  std::string name;
  int m = 0;
  int n = 0;
  double value = 0.0;
  BoundKind kind = BoundKind::Upper;
  std::string source;
  std::string root_equation;
  std::vector<double> equation_coeffs;
  std::map<std::string, double> aux;
};

const char* to_string(BoundKind k);

/// Upper bound -xi/2 on the absolute stability radius, xi the negative root
/// of L_n^(-m-1)(x) = C(m,n).
BoundReport absolute_upper(int m, int n);

/// Upper bound -xi on the parabolic radius, xi the negative root of
/// L_n^(-m-1)(x) = C(2m,2n). aux["closed_form"] holds the explicit cap
/// (n!)^(1/n) (C(2m,2n) - C(m,n))^(1/n) + 2m - (1 + (-1)^n).
BoundReport parabolic_upper(int m, int n);

/// Lower bound -xi on the parabolic radius with the same equation as
/// absolute_upper (it is exactly twice that bound).
BoundReport parabolic_lower(int m, int n);

/// Limit of the parabolic upper bound over m^2 as m grows: 4 (n!/(2n)!)^(1/n).
double parabolic_limit_cap(int n);

/// [r_prev, lambda_p^(m) r_prev], bracketing r_{m,2p-1} from r_{m-1,2p-1}.
Interval stage_inequality(int m, int n, int p, double r_prev);

/// (x+d)^(m-n) L_n^(-m-1)(x)
///   - (1-eta) C(m,n) sum_i (-1)^(m-n-i) C(2m,2i) C(m-n,i)/C(m,i) x^i d^(m-n-i)
Poly damping_polynomial(int m, int n, double eta, double delta);

/// Upper bound on the damped parabolic radius: minus the most negative root
/// of damping_polynomial. Rejects eta outside [0, 1) and delta < 0.
BoundReport damped_parabolic_upper(int m, int n, double eta, double delta);

/// Known optimal disc polynomials: order 1 gives (1+z/m)^m with radius m,
/// order 2 gives ((m-1)/m)(1+z/(m-1))^m + 1/m with radius m-1.
std::pair<Poly, double> closed_form_optimal(int m, int order);

/// Damped Chebyshev polynomial T_m(w0 + w1 z) / T_m(w0) with w0 = 1 + eta/m^2
/// and w1 = T_m(w0)/T_m'(w0). It stays within 1/T_m(w0) on [-span, -delta].
struct DampedChebyshev {
  Poly poly;
  double span = 0.0;
  double delta = 0.0;
  /// 1 - 1/T_m(w0): the damping actually achieved away from the origin.
  double eta = 0.0;
};
DampedChebyshev damped_chebyshev(int m, double eta);

/// Bracket on the optimal threshold factor from smallest zeros of classical
/// Laguerre polynomials, clipped to the elementary cap m-n+1. lo may equal hi.
struct ThresholdBracket {
  double lo = 0.0;
  double hi = 0.0;
  std::string rule;
};
ThresholdBracket threshold_upper_lower(int m, int n);

}  // namespace rkstab

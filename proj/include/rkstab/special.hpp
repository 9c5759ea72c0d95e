#pragma once

#include <vector>

#include "rkstab/poly.hpp"

namespace rkstab {

/// C(t, k) = t(t-1)...(t-k+1)/k! for real t; zero for k < 0.
double generalized_binomial(double t, int k);

/// Rising factorials (alpha)_0..(alpha)_upto.
struct PochhammerTable {
  PochhammerTable(double alpha, int upto);

  double alpha;
  int upto;
  std::vector<double> values;

  double operator[](int i) const { return values.at(static_cast<size_t>(i)); }
};

double pochhammer(double alpha, int n);

/// Generalized Laguerre polynomial from its explicit sum
///   L_n^(g)(x) = sum_l C(n+g, n-l) (-x)^l / l!
/// which is taken as the definition for every real g, negative included.
Poly laguerre_poly(int n, double gamma);

template <class T>
T laguerre_neg(int n, double gamma, T x) {
  return laguerre_poly(n, gamma)(x);
}

/// G_n(alpha, y) = sum_i C(n,i) (alpha)_i y^(n-i); monic.
Poly g_poly(int n, double alpha);

/// R_n(alpha, beta, y) = beta - (-1)^n G_n(alpha, y). Requires beta >= (alpha)_n.
Poly r_poly(int n, double alpha, double beta);

/// T_m mapped onto iv, i.e. T_m((2x - (a+b)) / (b-a)).
Poly chebyshev_shifted(int m, const Interval& iv);

/// Bernstein ordinates of the shifted T_m at degree m:
/// (-1)^(m-i) C(2m,2i) / C(m,i). They do not depend on the interval.
std::vector<double> chebyshev_bernstein_ordinates(int m);

/// Blossom of the shifted T_m with n slots at iv.lo and m-n slots at x.
double chebyshev_blossom_tail(int m, int n, const Interval& iv, double x);

/// Smallest zero of the classical Laguerre polynomial L_p^(alpha), alpha > -1.
double laguerre_smallest_zero(int p, double alpha);

}  // namespace rkstab

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rkstab {

using Complex = std::complex<double>;

/// Closed interval [lo, hi] with finite endpoints and lo < hi.
class Interval {
 public:
  Interval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  bool contains(double x) const { return x >= lo_ && x <= hi_; }

 private:
  double lo_;
  double hi_;
};

/// Real polynomial in the monomial basis. coeffs()[k] multiplies x^k; the
/// degree bound is coeffs().size() - 1 and trailing zeros are kept.
class Poly {
 public:
  Poly() : coeffs_{0.0} {}
  explicit Poly(std::vector<double> coeffs);
  Poly(std::initializer_list<double> coeffs)
      : Poly(std::vector<double>(coeffs)) {}

  static Poly constant(double c) { return Poly({c}); }
  /// a + b x
  static Poly linear(double a, double b) { return Poly({a, b}); }
  /// Truncated exponential sum_{j<=n} x^j / j!.
  static Poly truncated_exp(int n);

  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Exact degree ignoring trailing zeros; 0 for the zero polynomial.
  int degree() const;
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(int k) const {
    return k >= 0 && k <= degree_bound() ? coeffs_[static_cast<size_t>(k)]
                                         : 0.0;
  }

  double operator()(double x) const;
  Complex operator()(Complex z) const;

  /// k-th derivative; the degree bound drops by k with a floor of 0.
  Poly derivative(int k = 1) const;
  /// x -> p(a + b x)
  Poly compose_affine(double a, double b) const;
  /// Copy with degree bound raised (zero padded) or lowered (truncated).
  Poly with_degree_bound(int d) const;

  /// Membership in the class of degree-<=m polynomials whose first n+1
  /// Taylor coefficients are 1/j!.
  bool in_class(int m, int n, double tol = 1e-9) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(double s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, double s) { return a *= s; }
  friend Poly operator*(double s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  std::vector<double> coeffs_;
};

Poly pow(const Poly& p, int e);

/// Binomial coefficient C(n, k) in doubles by the multiplicative recurrence.
/// Exact for n <= 50 (intermediate products stay below 2^53); beyond
/// C(1029, 514) the result overflows to +inf.
double binomial(int n, int k);
double factorial(int n);

}  // namespace rkstab

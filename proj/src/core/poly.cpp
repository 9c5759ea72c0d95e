#include "rkstab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rkstab/error.hpp"

namespace rkstab {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  require(std::isfinite(lo) && std::isfinite(hi), "interval endpoints must be finite");
  require(lo < hi, "interval requires lo < hi");
}

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Poly Poly::truncated_exp(int n) {
  require(n >= 0, "truncated_exp: n must be non-negative");
  std::vector<double> c(static_cast<size_t>(n) + 1);
  double f = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) f *= j;
    c[static_cast<size_t>(j)] = 1.0 / f;
  }
  return Poly(std::move(c));
}

int Poly::degree() const {
  for (int k = degree_bound(); k > 0; --k)
    if (coeffs_[static_cast<size_t>(k)] != 0.0) return k;
  return 0;
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Poly::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative(int k) const {
  require(k >= 0, "derivative order must be non-negative");
  const int d = degree_bound();
  if (k > d) return Poly({0.0});
  std::vector<double> out(static_cast<size_t>(d - k) + 1);
  for (int j = k; j <= d; ++j) {
    double f = 1.0;
    for (int i = 0; i < k; ++i) f *= (j - i);
    out[static_cast<size_t>(j - k)] = f * coeffs_[static_cast<size_t>(j)];
  }
  return Poly(std::move(out));
}

Poly Poly::compose_affine(double a, double b) const {
  // Horner in polynomial arithmetic: acc = acc * (a + b x) + c_k
  const Poly lin = Poly::linear(a, b);
  Poly acc({0.0});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc.coeffs_[0] += *it;
  }
  return acc.with_degree_bound(degree_bound());
}

Poly Poly::with_degree_bound(int d) const {
  require(d >= 0, "degree bound must be non-negative");
  std::vector<double> c(coeffs_);
  c.resize(static_cast<size_t>(d) + 1, 0.0);
  return Poly(std::move(c));
}

bool Poly::in_class(int m, int n, double tol) const {
  if (n < 0 || n > m) return false;
  if (degree() > m) return false;
  double f = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) f *= j;
    // Compare derivatives at 0, i.e. j! c_j against 1.
    if (std::abs(coeff(j) * f - 1.0) > tol) return false;
  }
  return true;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly pow(const Poly& p, int e) {
  require(e >= 0, "pow: exponent must be non-negative");
  Poly result({1.0});
  Poly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 0; i < k; ++i) {
    // Divide first only when the product itself would overflow.
    c = c > std::numeric_limits<double>::max() / (n - i) ? c / (i + 1) * (n - i) : c * (n - i) / (i + 1);
  }
  return c;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace rkstab

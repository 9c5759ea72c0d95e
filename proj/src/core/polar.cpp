#include "rkstab/polar.hpp"

#include <string>

#include "rkstab/error.hpp"

namespace rkstab {

std::vector<Complex> elementary_symmetric(std::span<const Complex> values, int upto) {
  require(upto >= 0 && static_cast<size_t>(upto) <= values.size(),
          "elementary_symmetric: upto must lie in [0, number of values]");
  std::vector<Complex> sigma(static_cast<size_t>(upto) + 1, Complex{0.0});
  sigma[0] = 1.0;
  int seen = 0;
  for (const Complex& u : values) {
    ++seen;
    // Descending k keeps sigma_{k-1} at its previous-pass value.
    for (int k = std::min(seen, upto); k >= 1; --k)
      sigma[static_cast<size_t>(k)] += u * sigma[static_cast<size_t>(k - 1)];
  }
  return sigma;
}

Blossom::Blossom(Poly base, int degree) : base_(std::move(base)), degree_(degree) {
  require(degree >= 0, "blossom degree must be non-negative");
  require(base_.degree() <= degree,
          "blossom degree " + std::to_string(degree) + " is below the polynomial degree " +
              std::to_string(base_.degree()));
}

Complex Blossom::operator()(std::span<const Complex> args) const {
  require(args.size() == static_cast<size_t>(degree_),
          "blossom expects " + std::to_string(degree_) + " arguments, got " +
              std::to_string(args.size()));
  const int top = std::min(base_.degree_bound(), degree_);
  const auto sigma = elementary_symmetric(args, top);
  Complex acc = 0.0;
  for (int k = 0; k <= top; ++k)
    acc += base_.coeff(k) * sigma[static_cast<size_t>(k)] / binomial(degree_, k);
  return acc;
}

double Blossom::operator()(std::span<const double> args) const {
  std::vector<Complex> z(args.begin(), args.end());
  return (*this)(std::span<const Complex>(z)).real();
}

Poly Blossom::repeat(double scale, int count) const {
  require(count >= 0 && count <= degree_, "blossom repeat count must lie in [0, degree]");
  std::vector<double> c(static_cast<size_t>(count) + 1, 0.0);
  double s = 1.0;
  for (int l = 0; l <= count; ++l) {
    if (l > 0) s *= scale;
    c[static_cast<size_t>(l)] =
        base_.coeff(l) * (binomial(count, l) / binomial(degree_, l)) * s;
  }
  return Poly(std::move(c));
}

}  // namespace rkstab

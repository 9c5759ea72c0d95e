#pragma once

#include <vector>

namespace rkstab {

/// Dense row-major matrix, just enough for the small systems in the solvers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }

  std::vector<double> multiply(const std::vector<double>& x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Affine parameterization {x : A x = b} = {x0 + N y} of a full-row-rank
/// underdetermined system, from a Householder QR of A^T. x0 is the
/// minimum-norm solution; the columns of N are orthonormal.
struct AffineSolution {
  std::vector<double> particular;
  Matrix nullspace;  // cols(A) x (cols(A) - rows(A))
};
AffineSolution solve_underdetermined(const Matrix& a, const std::vector<double>& b);

/// Solves H x = g for symmetric positive definite H. Returns false if the
/// Cholesky factorization breaks down.
bool cholesky_solve(const Matrix& h, const std::vector<double>& g, std::vector<double>& x);

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal d and
/// off-diagonal e (e[i] couples i and i+1) by implicit-shift QL. Returns
/// eigenvalues ascending and the first component of each normalized
/// eigenvector. Throws Degenerate when 50 sweeps do not converge.
struct TridiagEigen {
  std::vector<double> values;
  std::vector<double> first_components;
};
TridiagEigen tridiagonal_eigen(std::vector<double> d, std::vector<double> e);

}  // namespace rkstab

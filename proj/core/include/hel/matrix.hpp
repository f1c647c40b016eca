#pragma once

#include <cstddef>
#include <vector>

#include "hel/util.hpp"

namespace hel {

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static DenseMatrix identity(std::size_t n);
  DenseMatrix transposed() const;
  DenseMatrix multiply(const DenseMatrix& other) const;
  std::vector<double> apply(const std::vector<double>& v) const;

  double frobenius_norm() const;
  double max_abs() const;
  bool is_symmetric(double tol = 1e-12) const;

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct JacobiOptions {
  // converged when off-diagonal Frobenius mass drops below
  // rel_tol * (diagonal Frobenius mass) + abs_tol
  double rel_tol = 1e-13;
  double abs_tol = 1e-300;
  int max_sweeps = 64;
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenpairs are ordered by |value| descending (ties: value descending,
/// then original index) and each eigenvector is sign-normalized so its
/// first significant coordinate is positive.  Bit-reproducible.
struct SymmetricEigen {
  std::vector<double> values;
  DenseMatrix vectors;  // column j is the eigenvector for values[j]
};

SymmetricEigen jacobi_eigen(const DenseMatrix& sym, const JacobiOptions& opts = {});

/// Singular value decomposition M = sum_j s_j u_j v_j^T computed through the
/// Jacobi eigendecomposition of M^T M.  Singular values descend; the u_j for
/// null singular values are completed deterministically by Gram-Schmidt so U
/// columns always form an orthonormal family of size min(rows, cols).
struct SingularDecomp {
  std::vector<double> values;  // length min(rows, cols)
  DenseMatrix u;               // rows x r
  DenseMatrix v;               // cols x r
};

SingularDecomp singular_decompose(const DenseMatrix& m, const JacobiOptions& opts = {});

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

/// Worst deviation of columns from orthonormality, max |G_ij - delta_ij|.
double orthonormality_error(const DenseMatrix& cols);

/// Deterministic random orthonormal basis (Gaussian then Gram-Schmidt).
DenseMatrix random_orthonormal(std::size_t n, Rng& rng);

}  // namespace hel

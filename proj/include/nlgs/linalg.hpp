// Small dense linear algebra: row-major matrices, a cyclic-Jacobi symmetric
// eigensolver and Cholesky solves. Sizes here are at most a few hundred.
#pragma once

#include <cstddef>
#include <vector>

namespace nlgs {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Eigensystem {
  Matrix u;                    // eigenvectors as columns, orthonormal
  std::vector<double> lambda;  // eigenvalues, ascending
};

// Symmetric eigendecomposition by cyclic Jacobi rotations.
// Requires max|m - m^T| <= 1e-10; throws std::invalid_argument otherwise and
// std::runtime_error if the off-diagonal mass has not vanished after the
// sweep limit.
Eigensystem eig_sym(const Matrix& m);

// In-place lower Cholesky factor of a symmetric positive definite matrix.
// Throws std::runtime_error on a non-positive pivot.
Matrix cholesky(const Matrix& m);

// Solves L L^T x = b given the lower factor L.
std::vector<double> cholesky_solve(const Matrix& l, const std::vector<double>& b);

// Forward substitution L z = b.
std::vector<double> forward_solve(const Matrix& l, const std::vector<double>& b);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace nlgs

#pragma once

#include <cstddef>
#include <vector>

#include "gafzeros/common.hpp"

namespace gafzeros {

// Dense complex matrix, row major. Sized for the small systems this library
// needs (Gram matrices, Toeplitz sections up to a few hundred rows).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cx(0.0, 0.0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cx(1.0, 0.0);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cx>& data() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cx> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Matrix subtract(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);

// Largest entrywise deviation from Hermitian symmetry, max |A_ij - conj(A_ji)|.
double hermitian_defect(const Matrix& a);

// Determinant by LU with partial pivoting; zero for singular input.
cx determinant(const Matrix& a);

// Solves A X = B by LU with partial pivoting. Throws IllConditionedError when
// a pivot vanishes. A must be square with B.rows() == A.rows().
Matrix solve(const Matrix& a, const Matrix& b);

}  // namespace gafzeros

#include "gafzeros/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace gafzeros {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cx aik = a(i, k);
      if (aik == cx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("subtract: shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const cx& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

double hermitian_defect(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

namespace {

// LU with partial pivoting in place; returns the permutation sign, or 0 when a
// pivot column is exactly zero (singular input).
int lu_factor(Matrix& m, std::vector<std::size_t>& perm) {
  const std::size_t n = m.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(m(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      std::swap(perm[col], perm[pivot]);
      sign = -sign;
    }
    const cx d = m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cx f = m(r, col) / d;
      m(r, col) = f;
      for (std::size_t j = col + 1; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return sign;
}

}  // namespace

cx determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  Matrix lu = a;
  std::vector<std::size_t> perm;
  const int sign = lu_factor(lu, perm);
  if (sign == 0) return cx(0.0, 0.0);
  cx det(static_cast<double>(sign), 0.0);
  for (std::size_t i = 0; i < lu.rows(); ++i) det *= lu(i, i);
  return det;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve: not square");
  if (b.rows() != a.rows()) throw std::invalid_argument("solve: rhs shape mismatch");
  Matrix lu = a;
  std::vector<std::size_t> perm;
  if (lu_factor(lu, perm) == 0)
    throw IllConditionedError("solve: singular matrix", cx(0.0, 0.0));
  const std::size_t n = a.rows();
  Matrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    // Forward substitution on the permuted right-hand side.
    for (std::size_t i = 0; i < n; ++i) {
      cx s = b(perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x(j, c);
      x(i, c) = s;
    }
    // Back substitution.
    for (std::size_t ii = n; ii-- > 0;) {
      cx s = x(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) s -= lu(ii, j) * x(j, c);
      x(ii, c) = s / lu(ii, ii);
    }
  }
  return x;
}

}  // namespace gafzeros

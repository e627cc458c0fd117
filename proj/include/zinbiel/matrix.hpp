#pragma once

#include <cstddef>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Dense row-major matrix of rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  bool row_is_zero(std::size_t i) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// The unique reduced row-echelon form (idempotent).
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact determinant by fraction Gaussian elimination; square input only.
Rational determinant(const Matrix& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Rows spanning the right kernel {x : Mx = 0}.
std::vector<std::vector<Rational>> kernel_rows(const Matrix& m);

}  // namespace zinbiel

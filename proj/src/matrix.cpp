#include "zinbiel/matrix.hpp"

#include <stdexcept>

namespace zinbiel {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return std::vector<Rational>(entries_.begin() + static_cast<long>(i * cols_),
                               entries_.begin() + static_cast<long>((i + 1) * cols_));
}

bool Matrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!at(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (at(i, j).is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Rational p = a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) /= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return a;
}

std::size_t rank(const Matrix& m) {
  Matrix e = rref(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e.rows(); ++i)
    if (!e.row_is_zero(i)) ++r;
  return r;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Rational p = a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c) / p;
      for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  Matrix e = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (e.at(i, i) != Rational(1)) throw std::domain_error("singular matrix has no inverse");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.at(i, n + j);
  return inv;
}

std::vector<std::vector<Rational>> kernel_rows(const Matrix& m) {
  Matrix e = rref(m);
  const std::size_t n = m.cols();
  std::vector<long> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    if (e.row_is_zero(i)) break;
    for (std::size_t j = 0; j < n; ++j)
      if (!e.at(i, j).is_zero()) {
        pivot_of_col[j] = static_cast<long>(i);
        break;
      }
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Rational> v(n);
    v[free_col] = Rational(1);
    for (std::size_t j = 0; j < n; ++j) {
      long pr = pivot_of_col[j];
      if (pr >= 0) v[j] = -e.at(static_cast<std::size_t>(pr), free_col);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace zinbiel

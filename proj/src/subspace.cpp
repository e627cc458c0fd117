#include "zinbiel/subspace.hpp"

#include <stdexcept>

namespace zinbiel {

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("span: vector length does not match ambient dimension");
  Matrix e = rref(Matrix::from_rows(vectors, ambient_dim));
  std::size_t nonzero = 0;
  while (nonzero < e.rows() && !e.row_is_zero(nonzero)) ++nonzero;
  Matrix basis(nonzero, ambient_dim);
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) basis.at(i, j) = e.at(i, j);
  return Subspace(ambient_dim, std::move(basis));
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) {
        out.push_back(j);
        break;
      }
  return out;
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce: ambient dimension mismatch");
  auto piv = pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const Rational& f = v[piv[i]];
    if (f.is_zero()) continue;
    Rational scale = f;  // pivot entries are 1
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j).is_zero()) continue;
      v[j] -= scale * basis_.at(i, j);
    }
  }
  return v;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  auto res = reduce(v);
  for (const auto& x : res)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_.row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_.row(i));
  return Subspace::span(rows, a.ambient_);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("intersect: ambient dimension mismatch");
  // x in a∩b iff x = sum c_i a_i with sum c_i reduce_b(a_i) = 0; the c-space
  // is the kernel of the matrix whose columns are the reduced a-basis rows.
  const std::size_t p = a.dim();
  Matrix reduced(a.ambient_, p);
  for (std::size_t i = 0; i < p; ++i) {
    auto res = b.reduce(a.basis_.row(i));
    for (std::size_t j = 0; j < a.ambient_; ++j) reduced.at(j, i) = res[j];
  }
  std::vector<std::vector<Rational>> gens;
  for (const auto& c : kernel_rows(reduced)) {
    std::vector<Rational> v(a.ambient_);
    for (std::size_t i = 0; i < p; ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < a.ambient_; ++j) v[j] += c[i] * a.basis_.at(i, j);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, a.ambient_);
}

}  // namespace zinbiel

#include "zinbiel/superalgebra.hpp"

#include <stdexcept>

namespace zinbiel {

std::string BasisLabel::str() const {
  return (parity == Parity::even ? "e" : "f") + std::to_string(index);
}

BasisLabel BasisLabel::parse(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'e' && text[0] != 'f'))
    throw std::invalid_argument("malformed basis label: \"" + text + "\"");
  std::size_t idx = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed basis label: \"" + text + "\"");
    idx = idx * 10 + static_cast<std::size_t>(c - '0');
  }
  if (idx == 0) throw std::invalid_argument("basis labels are 1-based: \"" + text + "\"");
  return {text[0] == 'e' ? Parity::even : Parity::odd, idx};
}

SuperElement SuperElement::basis(std::size_t n, std::size_t m, BasisLabel label) {
  SuperElement x(n, m);
  if (label.parity == Parity::even) {
    if (label.index == 0 || label.index > n) throw std::invalid_argument("basis index out of range");
    x.even_[label.index - 1] = Rational(1);
  } else {
    if (label.index == 0 || label.index > m) throw std::invalid_argument("basis index out of range");
    x.odd_[label.index - 1] = Rational(1);
  }
  return x;
}

SuperElement SuperElement::from_flat(std::size_t n, std::size_t m, const std::vector<Rational>& flat) {
  if (flat.size() != n + m) throw std::invalid_argument("flat vector length mismatch");
  SuperElement x(n, m);
  for (std::size_t i = 0; i < n; ++i) x.even_[i] = flat[i];
  for (std::size_t i = 0; i < m; ++i) x.odd_[i] = flat[n + i];
  return x;
}

Rational SuperElement::coeff(BasisLabel label) const {
  const auto& part = label.parity == Parity::even ? even_ : odd_;
  if (label.index == 0 || label.index > part.size())
    throw std::invalid_argument("basis index out of range");
  return part[label.index - 1];
}

std::vector<Rational> SuperElement::flat() const {
  std::vector<Rational> out;
  out.reserve(even_.size() + odd_.size());
  out.insert(out.end(), even_.begin(), even_.end());
  out.insert(out.end(), odd_.begin(), odd_.end());
  return out;
}

bool SuperElement::even_part_zero() const {
  for (const auto& x : even_)
    if (!x.is_zero()) return false;
  return true;
}

bool SuperElement::odd_part_zero() const {
  for (const auto& x : odd_)
    if (!x.is_zero()) return false;
  return true;
}

bool SuperElement::is_zero() const { return even_part_zero() && odd_part_zero(); }

Parity SuperElement::homogeneous_parity() const {
  if (!is_homogeneous()) throw std::invalid_argument("parity of a non-homogeneous element");
  if (is_zero()) return Parity::even;
  return even_part_zero() ? Parity::odd : Parity::even;
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  if (o.even_.size() != even_.size() || o.odd_.size() != odd_.size())
    throw std::invalid_argument("element dimension mismatch");
  for (std::size_t i = 0; i < even_.size(); ++i) even_[i] += o.even_[i];
  for (std::size_t i = 0; i < odd_.size(); ++i) odd_[i] += o.odd_[i];
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  if (o.even_.size() != even_.size() || o.odd_.size() != odd_.size())
    throw std::invalid_argument("element dimension mismatch");
  for (std::size_t i = 0; i < even_.size(); ++i) even_[i] -= o.even_[i];
  for (std::size_t i = 0; i < odd_.size(); ++i) odd_[i] -= o.odd_[i];
  return *this;
}

SuperElement operator*(const Rational& c, const SuperElement& x) {
  SuperElement out = x;
  for (auto& v : out.even_) v *= c;
  for (auto& v : out.odd_) v *= c;
  return out;
}

SuperElement SuperElement::operator-() const { return Rational(-1) * (*this); }

SuperAlgebra::SuperAlgebra(std::size_t n, std::size_t m)
    : n_(n), m_(m), products_((n + m) * (n + m), SuperElement(n, m)) {}

BasisLabel SuperAlgebra::label(std::size_t global_index) const {
  if (global_index >= dim()) throw std::invalid_argument("basis index out of range");
  if (global_index < n_) return e_label(global_index + 1);
  return f_label(global_index - n_ + 1);
}

std::size_t SuperAlgebra::global_index(BasisLabel label) const {
  if (label.parity == Parity::even) {
    if (label.index == 0 || label.index > n_) throw std::invalid_argument("basis index out of range");
    return label.index - 1;
  }
  if (label.index == 0 || label.index > m_) throw std::invalid_argument("basis index out of range");
  return n_ + label.index - 1;
}

void SuperAlgebra::set_product(BasisLabel left, BasisLabel right, SuperElement value) {
  if (value.dim_even() != n_ || value.dim_odd() != m_)
    throw std::invalid_argument("product value dimension mismatch");
  Parity target = product_parity(left.parity, right.parity);
  if (target == Parity::even && !value.odd_part_zero())
    throw std::invalid_argument("grading violation: " + left.str() + "*" + right.str() +
                                " must be even");
  if (target == Parity::odd && !value.even_part_zero())
    throw std::invalid_argument("grading violation: " + left.str() + "*" + right.str() +
                                " must be odd");
  products_[global_index(left) * dim() + global_index(right)] = std::move(value);
}

const SuperElement& SuperAlgebra::product(std::size_t left, std::size_t right) const {
  if (left >= dim() || right >= dim()) throw std::invalid_argument("basis index out of range");
  return products_[left * dim() + right];
}

const SuperElement& SuperAlgebra::product(BasisLabel left, BasisLabel right) const {
  return product(global_index(left), global_index(right));
}

SuperElement SuperAlgebra::multiply(const SuperElement& x, const SuperElement& y) const {
  if (x.dim_even() != n_ || x.dim_odd() != m_ || y.dim_even() != n_ || y.dim_odd() != m_)
    throw std::invalid_argument("element dimension mismatch");
  SuperElement out(n_, m_);
  auto xf = x.flat();
  auto yf = y.flat();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (xf[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (yf[j].is_zero()) continue;
      const SuperElement& p = products_[i * dim() + j];
      out += (xf[i] * yf[j]) * p;
    }
  }
  return out;
}

Subspace SuperAlgebra::product_subspace(const Subspace& u, const Subspace& v) const {
  if (u.ambient_dim() != dim() || v.ambient_dim() != dim())
    throw std::invalid_argument("product_subspace: ambient dimension mismatch");
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    SuperElement ui = element_from_subspace_row(u, i);
    for (std::size_t j = 0; j < v.dim(); ++j) {
      SuperElement vj = element_from_subspace_row(v, j);
      gens.push_back(multiply(ui, vj).flat());
    }
  }
  return Subspace::span(gens, dim());
}

SuperElement SuperAlgebra::element_from_subspace_row(const Subspace& s, std::size_t row) const {
  return SuperElement::from_flat(n_, m_, s.basis().row(row));
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.products_ == b.products_;
}

SuperElement superidentity_residual(const SuperAlgebra& alg, const SuperElement& a,
                                    const SuperElement& b, const SuperElement& c) {
  if (!a.is_homogeneous() || !b.is_homogeneous() || !c.is_homogeneous())
    throw std::invalid_argument("superidentity residual needs homogeneous arguments");
  bool flip = b.homogeneous_parity() == Parity::odd && c.homogeneous_parity() == Parity::odd;
  SuperElement bc = alg.multiply(b, c);
  SuperElement cb = alg.multiply(c, b);
  SuperElement inner = flip ? bc - cb : bc + cb;
  return alg.multiply(alg.multiply(a, b), c) - alg.multiply(a, inner);
}

SuperElement right_supercommutativity_residual(const SuperAlgebra& alg, const SuperElement& x,
                                               const SuperElement& y, const SuperElement& z) {
  if (!x.is_homogeneous() || !y.is_homogeneous() || !z.is_homogeneous())
    throw std::invalid_argument("right supercommutativity residual needs homogeneous arguments");
  bool flip = y.homogeneous_parity() == Parity::odd && z.homogeneous_parity() == Parity::odd;
  SuperElement lhs = alg.multiply(alg.multiply(x, y), z);
  SuperElement rhs = alg.multiply(alg.multiply(x, z), y);
  return flip ? lhs + rhs : lhs - rhs;
}

std::optional<ZinbielViolation> zinbiel_violation(const SuperAlgebra& alg) {
  const std::size_t d = alg.dim();
  for (std::size_t x = 0; x < d; ++x) {
    SuperElement ex = SuperElement::basis(alg.dim_even(), alg.dim_odd(), alg.label(x));
    for (std::size_t y = 0; y < d; ++y) {
      SuperElement ey = SuperElement::basis(alg.dim_even(), alg.dim_odd(), alg.label(y));
      for (std::size_t z = 0; z < d; ++z) {
        SuperElement ez = SuperElement::basis(alg.dim_even(), alg.dim_odd(), alg.label(z));
        SuperElement r = superidentity_residual(alg, ex, ey, ez);
        if (!r.is_zero()) return ZinbielViolation{alg.label(x), alg.label(y), alg.label(z), r};
      }
    }
  }
  return std::nullopt;
}

}  // namespace zinbiel

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/rational.hpp"
#include "zinbiel/subspace.hpp"

namespace zinbiel {

enum class Parity { even, odd };

inline Parity product_parity(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}

/// Basis label: e<k> for the even basis, f<k> for the odd basis, 1-based.
struct BasisLabel {
  Parity parity;
  std::size_t index;

  std::string str() const;
  static BasisLabel parse(const std::string& text);

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

inline BasisLabel e_label(std::size_t k) { return {Parity::even, k}; }
inline BasisLabel f_label(std::size_t k) { return {Parity::odd, k}; }

/// Element of a Z2-graded space with graded dimensions (n, m).
class SuperElement {
public:
  SuperElement() = default;
  SuperElement(std::size_t n, std::size_t m) : even_(n), odd_(m) {}
  SuperElement(std::vector<Rational> even, std::vector<Rational> odd)
      : even_(std::move(even)), odd_(std::move(odd)) {}

  static SuperElement basis(std::size_t n, std::size_t m, BasisLabel label);
  /// Splits a flat coordinate vector ordered e_1..e_n, f_1..f_m.
  static SuperElement from_flat(std::size_t n, std::size_t m, const std::vector<Rational>& flat);

  std::size_t dim_even() const { return even_.size(); }
  std::size_t dim_odd() const { return odd_.size(); }
  const std::vector<Rational>& even() const { return even_; }
  const std::vector<Rational>& odd() const { return odd_; }
  Rational coeff(BasisLabel label) const;

  std::vector<Rational> flat() const;

  bool is_zero() const;
  bool even_part_zero() const;
  bool odd_part_zero() const;
  /// Homogeneous means one graded part vanishes; zero counts as both.
  bool is_homogeneous() const { return even_part_zero() || odd_part_zero(); }
  /// Parity of a homogeneous element; zero reports even by convention.
  Parity homogeneous_parity() const;

  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(const Rational& c, const SuperElement& x);
  SuperElement operator-() const;

  friend bool operator==(const SuperElement&, const SuperElement&) = default;

private:
  std::vector<Rational> even_;
  std::vector<Rational> odd_;
};

/// Z2-graded algebra given by its structure constants over the ordered basis
/// e_1..e_n, f_1..f_m. Basis pairs without a stored product multiply to zero.
/// Stored products must respect the grading (even*even and odd*odd land in
/// the even part, mixed pairs in the odd part); set_product enforces this.
class SuperAlgebra {
public:
  SuperAlgebra(std::size_t n, std::size_t m);

  std::size_t dim_even() const { return n_; }
  std::size_t dim_odd() const { return m_; }
  std::size_t dim() const { return n_ + m_; }

  BasisLabel label(std::size_t global_index) const;
  std::size_t global_index(BasisLabel label) const;

  /// Throws std::invalid_argument on index/dimension mismatch or a grading
  /// violation.
  void set_product(BasisLabel left, BasisLabel right, SuperElement value);

  const SuperElement& product(std::size_t left, std::size_t right) const;
  const SuperElement& product(BasisLabel left, BasisLabel right) const;

  /// Bilinear extension of the basis table.
  SuperElement multiply(const SuperElement& x, const SuperElement& y) const;

  /// The subspace of Q^(n+m) spanned by products u*v over bases of U and V.
  Subspace product_subspace(const Subspace& u, const Subspace& v) const;

  SuperElement element_from_subspace_row(const Subspace& s, std::size_t row) const;

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);

private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<SuperElement> products_;  // dense (n+m)^2 table
};

/// sZ{a,b,c} = (ab)c - a(bc + (-1)^{|b||c|} cb).
///
/// The sign exponent is the product of the parities of the SECOND and THIRD
/// arguments. Arguments must be homogeneous; zero counts as even.
SuperElement superidentity_residual(const SuperAlgebra& alg, const SuperElement& a,
                                    const SuperElement& b, const SuperElement& c);

/// (xy)z - (-1)^{|y||z|} (xz)y; vanishes identically on Zinbiel algebras.
SuperElement right_supercommutativity_residual(const SuperAlgebra& alg, const SuperElement& x,
                                               const SuperElement& y, const SuperElement& z);

struct ZinbielViolation {
  BasisLabel x, y, z;
  SuperElement residual;
};

/// First basis triple (in lexicographic basis order) with nonzero residual,
/// or nullopt when the algebra is Zinbiel.
std::optional<ZinbielViolation> zinbiel_violation(const SuperAlgebra& alg);

inline bool is_zinbiel(const SuperAlgebra& alg) { return !zinbiel_violation(alg).has_value(); }

}  // namespace zinbiel

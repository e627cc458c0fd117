#pragma once

#include <cstddef>
#include <vector>

#include "zinbiel/matrix.hpp"

namespace zinbiel {

/// Canonical subspace of Q^ambient.
///
/// The basis is stored in reduced row-echelon form with no zero rows, so two
/// subspaces are equal as sets exactly when their stored bases are identical.
class Subspace {
public:
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  /// Canonical span; every vector must have length ambient_dim.
  static Subspace span(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;

  /// Residual of v after elimination against the basis; zero iff v lies here.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_ = 0;
  Matrix basis_;
};

}  // namespace zinbiel

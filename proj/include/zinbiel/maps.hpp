#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/matrix.hpp"
#include "zinbiel/spectra.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// Parity-preserving invertible linear map: an n x n block on the even part
/// and an m x m block on the odd part. Columns hold the images of the basis
/// vectors. Construction checks exact nonzero determinants.
class GradedLinearMap {
public:
  GradedLinearMap(Matrix even_block, Matrix odd_block);

  static GradedLinearMap identity(std::size_t n, std::size_t m);

  const Matrix& even_block() const { return even_; }
  const Matrix& odd_block() const { return odd_; }

  SuperElement apply(const SuperElement& x) const;
  GradedLinearMap inverse() const;
  /// this after inner: (this ∘ inner)(x) = this(inner(x)).
  GradedLinearMap compose(const GradedLinearMap& inner) const;

private:
  Matrix even_;
  Matrix odd_;
};

/// Pushforward of the structure along P: the algebra B with
/// x *_B y = P(P^{-1}x *_A P^{-1}y), i.e. the unique table making P an
/// isomorphism from A to B.
SuperAlgebra transport(const SuperAlgebra& alg, const GradedLinearMap& p);

struct IsomorphismCheck {
  bool ok;
  std::optional<std::pair<BasisLabel, BasisLabel>> failing_pair;
};

/// True iff transport(A, P) equals B as tables (exact equality).
IsomorphismCheck is_isomorphism(const SuperAlgebra& a, const SuperAlgebra& b,
                                const GradedLinearMap& p);

/// Graded-isomorphism invariants used to tell algebras apart. The
/// characteristic sequence entry is the candidate-scan value (a certified
/// lower bound, deterministic for a fixed seed).
struct InvariantBattery {
  std::size_t dim_even = 0;
  std::size_t dim_odd = 0;
  std::vector<std::pair<std::size_t, std::size_t>> power_dims;  // graded dims of Z^k
  std::vector<std::size_t> even_chain_dims;                     // dims of Z0^k
  std::vector<std::size_t> odd_chain_dims;                      // dims of Z1^k
  std::optional<std::size_t> nilpotency;
  // (even dim, odd dim) of the left, right and two-sided annihilators.
  std::array<std::pair<std::size_t, std::size_t>, 3> annihilator_dims{};
  std::size_t odd_pairing_sym_rank = 0;      // dim span{f_i f_j + f_j f_i}
  std::size_t odd_pairing_antisym_rank = 0;  // dim span{f_i f_j - f_j f_i}
  std::size_t dim_even_square = 0;
  std::optional<CharSequence> char_seq;

  friend bool operator==(const InvariantBattery&, const InvariantBattery&) = default;
};

InvariantBattery invariant_battery(const SuperAlgebra& alg, std::uint64_t seed = 0);

struct DistinguishResult {
  bool distinguishable;
  std::string invariant;  // name of the first differing battery field
};

/// One-sided comparison: reports a differing invariant or "inconclusive";
/// never claims two algebras are isomorphic. Throws std::invalid_argument
/// when total dimensions differ.
DistinguishResult distinguish(const SuperAlgebra& a, const SuperAlgebra& b, std::uint64_t seed = 0);

}  // namespace zinbiel

#pragma once

#include <optional>
#include <vector>

#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// The descending power sequences of a graded algebra:
///   full:       Z^1 = Z,   Z^{k+1} = Z * Z^k
///   even_chain: Z0^1 = Z0, Z0^{k+1} = Z0 * Z0^k (inside the even part)
///   odd_chain:  Z1^1 = Z1, Z1^{k+1} = Z0 * Z1^k
/// Each list ends with the zero subspace when the chain reaches it, or with
/// the first stabilized nonzero term otherwise. All terms live in the full
/// (n+m)-dimensional ambient space.
struct PowerSequence {
  std::vector<Subspace> full;
  std::vector<Subspace> even_chain;
  std::vector<Subspace> odd_chain;
};

std::vector<std::size_t> chain_dims(const std::vector<Subspace>& chain);

/// Span of {u*v : u in basis(U), v in basis(V)}.
Subspace product_subspace(const SuperAlgebra& alg, const Subspace& u, const Subspace& v);

PowerSequence power_sequence(const SuperAlgebra& alg);

/// Least s with Z^s = 0, or nullopt when the power sequence stabilizes at a
/// nonzero subspace.
std::optional<std::size_t> nilpotency_index(const SuperAlgebra& alg);

/// Derived series Z^(1) = Z, Z^(k+1) = Z^(k) * Z^(k) reaches zero.
bool is_solvable(const SuperAlgebra& alg);

/// dim Z^i = dim + 1 - i for every i up to the nilpotency index.
bool is_null_filiform(const SuperAlgebra& alg);

}  // namespace zinbiel

#pragma once

#include "zinbiel/subspace.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// Left (xZ = 0), right (Zx = 0) and two-sided annihilators. All three are
/// graded subspaces of the ambient space.
struct AnnihilatorReport {
  Subspace left;
  Subspace right;
  Subspace two_sided;
};

AnnihilatorReport annihilators(const SuperAlgebra& alg);

/// RC(a) = {x : ax = 0}, the kernel of left multiplication by a.
Subspace right_annihilator(const SuperAlgebra& alg, const SuperElement& a);

/// Verifies RC(a1) ⊆ RC(a1 a2) for homogeneous a1, a2; a failure signals
/// input that is not right-supercommutative.
bool rc_monotonicity_check(const SuperAlgebra& alg, const SuperElement& a1, const SuperElement& a2);

/// Produces a nonzero homogeneous e with eZ = 0: seed from the last nonzero
/// even power (or the first odd basis vector when the even part is zero),
/// then repeatedly replace e by ex for odd basis x with ex != 0. Throws
/// std::domain_error on the zero-dimensional algebra or when the iteration
/// fails to converge (non-Zinbiel input).
SuperElement find_left_annihilating_homogeneous(const SuperAlgebra& alg);

bool is_right_ideal(const SuperAlgebra& alg, const Subspace& ideal);
bool is_ideal(const SuperAlgebra& alg, const Subspace& ideal);

/// Z * I; when I is a right ideal this is an ideal.
Subspace left_product_ideal(const SuperAlgebra& alg, const Subspace& ideal);

struct MinimalIdealCertificate {
  Subspace ideal;          // one-dimensional and graded
  SuperElement generator;  // homogeneous spanning element
  Parity parity;
  bool left_product_zero;   // Z * I = 0
  bool right_product_zero;  // I * Z = 0
};

/// One-dimensional graded ideal spanned by a homogeneous element of Ann(Z).
/// Throws std::domain_error when Ann(Z) = 0 (impossible for a nonzero
/// Zinbiel superalgebra; signals non-Zinbiel input).
MinimalIdealCertificate minimal_graded_ideal(const SuperAlgebra& alg);

/// For algebras with one-dimensional odd part: Z0*Z1 = Z1*Z0 = 0 and
/// Z1*Z1 ⊆ {x : x Z0 = 0}. Throws std::invalid_argument when dim_odd != 1.
bool type_n1_structure_check(const SuperAlgebra& alg);

}  // namespace zinbiel

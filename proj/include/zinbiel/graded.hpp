#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "zinbiel/maps.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// Descending flags Z0^k and Z1^k (ambient subspaces, stabilization
/// detected), the raw material of the natural gradation.
struct Filtration {
  std::vector<Subspace> even;
  std::vector<Subspace> odd;
};

Filtration filtration(const SuperAlgebra& alg);

/// Layer data of gr: layer i holds (dim Z0^i - dim Z0^{i+1},
/// dim Z1^i - dim Z1^{i+1}), plus a graded map sending the standard basis to
/// a basis adapted to the flags (layer-by-layer complement representatives,
/// taken from echelon rows at pivots absent from the next flag step).
struct GradedLayers {
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  GradedLinearMap adapted;
};

struct AssociatedGraded {
  SuperAlgebra algebra;  // gr, over the adapted basis ordering
  GradedLayers layers;
};

/// Witness that the product of two filtration layers escapes the expected
/// level, i.e. gr is not a graded superalgebra.
struct GradedViolation {
  std::size_t layer_left;
  std::size_t layer_right;
  SuperElement product;
};

/// Builds gr by multiplying layer representatives, checking the product of
/// layers i and j lies in filtration level i+j, and projecting onto layer
/// i+j. Throws std::domain_error when the flags stabilize at a nonzero
/// subspace (non-nilpotent input), in which case the layers cannot span.
std::variant<AssociatedGraded, GradedViolation> associated_graded(const SuperAlgebra& alg);

enum class GradingVerdict { yes, no, unknown };

struct GradingReport {
  GradingVerdict verdict;
  std::string detail;
  std::optional<GradedViolation> violation;
};

/// yes: the structure constants in the adapted basis already coincide with
/// gr's (the adapted map is an isomorphism onto gr). no: layer condition
/// fails, or an invariant battery value separates the algebra from gr.
/// unknown otherwise.
GradingReport natural_grading_verdict(const SuperAlgebra& alg);

}  // namespace zinbiel

#pragma once

#include <string>

#include <json.hpp>

#include "zinbiel/maps.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// Canonical algebra JSON:
///   {"dim_even": n, "dim_odd": m,
///    "products": [{"left": "e1", "right": "f1", "result": {"f2": "1/2"}}]}
/// Zero products are omitted; products are emitted in basis order of
/// (left, right); result keys are basis labels with Rational string values.
nlohmann::ordered_json algebra_to_json(const SuperAlgebra& alg);

/// Throws std::invalid_argument on malformed input (bad labels, rationals,
/// grading violations, out-of-range indices).
SuperAlgebra algebra_from_json(const nlohmann::json& j);

std::string algebra_to_json_string(const SuperAlgebra& alg);
SuperAlgebra algebra_from_json_string(const std::string& text);

/// Graded map JSON: {"even": [["1","0"],...], "odd": [[..]]} with rows of
/// Rational strings; columns are basis-vector images.
nlohmann::ordered_json map_to_json(const GradedLinearMap& map);
GradedLinearMap map_from_json(const nlohmann::json& j);

/// Parses element expressions like "e1", "-f2", "e1+1/2e3", "e1 - 2/3 f2".
SuperElement parse_element(const std::string& text, std::size_t n, std::size_t m);

/// Inverse of parse_element on its canonical form; "0" for the zero element.
std::string element_to_string(const SuperElement& x);

}  // namespace zinbiel

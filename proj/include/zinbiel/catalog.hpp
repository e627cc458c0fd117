#pragma once

#include <map>
#include <string>
#include <vector>

#include "zinbiel/rational.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

enum class Family {
  NullFiliformAlg,
  NgFiliformAlg,
  NullFiliformSuper,
  NF1,
  NF2,
  NF3,
  NF4,
  NF5,
  A1,
  A2,
  Z21,
  Z31,
  Z32,
  Z33,
  Z34,
  Z35,
  z31,
  z32,
  z33,
  z34,
  z35,
  z36,
  z37,
  z38,
  z39,
};

std::string family_id(Family f);
Family family_from_id(const std::string& id);  // throws std::invalid_argument

/// A catalog instance request: family, graded dimensions, and named rational
/// parameters ("alpha" for NF2/z31/z37, "beta" for Z34). Families with fixed
/// dimensions accept n = 0 / m = 0 as "use the default".
struct FamilySpec {
  Family family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::map<std::string, Rational> params;
};

/// Builds the multiplication table of the requested family. Throws
/// std::invalid_argument naming the violated constraint (dimension bounds,
/// graded dimension pattern, missing parameter).
SuperAlgebra build(const FamilySpec& spec);

struct CatalogEntry {
  std::string id;
  std::string table;        // defining products, in short form
  std::string constraints;  // dimension/parameter constraints
  FamilySpec default_spec;  // smallest admissible instance
};

/// One entry per family, in catalog order; 25 entries.
std::vector<CatalogEntry> catalog_index();

}  // namespace zinbiel

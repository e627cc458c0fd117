#pragma once

// Shared fixtures and generators for the test suites.

#include <array>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/catalog.hpp"
#include "zinbiel/maps.hpp"
#include "zinbiel/rng.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zt {

using namespace zinbiel;

struct ProductSpec {
  const char* left;
  const char* right;
  const char* target;
  const char* coeff;
};

// Builds a table from (left, right, target, coeff) rows; repeated (left,
// right) rows accumulate into one product value.
inline SuperAlgebra make_algebra(std::size_t n, std::size_t m,
                                 std::initializer_list<ProductSpec> products) {
  SuperAlgebra alg(n, m);
  std::vector<std::pair<std::pair<std::string, std::string>, SuperElement>> acc;
  for (const auto& p : products) {
    SuperElement value = Rational::parse(p.coeff) *
                         SuperElement::basis(n, m, BasisLabel::parse(p.target));
    bool merged = false;
    for (auto& [key, v] : acc)
      if (key.first == p.left && key.second == p.right) {
        v += value;
        merged = true;
        break;
      }
    if (!merged) acc.push_back({{p.left, p.right}, std::move(value)});
  }
  for (const auto& [key, v] : acc)
    alg.set_product(BasisLabel::parse(key.first), BasisLabel::parse(key.second), v);
  return alg;
}

inline SuperElement basis_of(const SuperAlgebra& alg, const char* label) {
  return SuperElement::basis(alg.dim_even(), alg.dim_odd(), BasisLabel::parse(label));
}

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng, 3, 2);
  return m;
}

inline Matrix random_invertible(SplitMix64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

inline GradedLinearMap random_graded_map(SplitMix64& rng, std::size_t n, std::size_t m) {
  return GradedLinearMap(random_invertible(rng, n), random_invertible(rng, m));
}

inline FamilySpec family_spec(Family family, std::size_t n, std::size_t m,
                              const char* alpha = nullptr, const char* beta = nullptr) {
  FamilySpec spec{family, n, m, {}};
  if (alpha) spec.params["alpha"] = Rational::parse(alpha);
  if (beta) spec.params["beta"] = Rational::parse(beta);
  return spec;
}

// The instance grid the acceptance suite runs: every family at its
// designated dimensions and parameter samples.
inline std::vector<std::pair<std::string, SuperAlgebra>> catalog_instances() {
  std::vector<std::pair<std::string, SuperAlgebra>> out;
  auto add = [&](const std::string& name, const FamilySpec& spec) {
    out.emplace_back(name, build(spec));
  };
  for (std::size_t n = 3; n <= 10; ++n)
    add("NullFiliformAlg n=" + std::to_string(n), family_spec(Family::NullFiliformAlg, n, 0));
  for (std::size_t n = 5; n <= 9; ++n)
    add("NgFiliformAlg n=" + std::to_string(n), family_spec(Family::NgFiliformAlg, n, 0));
  for (std::size_t d = 3; d <= 11; ++d)
    add("NullFiliformSuper dim=" + std::to_string(d),
        family_spec(Family::NullFiliformSuper, d / 2, d - d / 2));
  const std::array<std::pair<std::size_t, std::size_t>, 3> nf_dims{{{6, 4}, {6, 5}, {7, 5}}};
  const std::array<const char*, 4> alphas{"0", "1", "-2", "3/7"};
  for (auto [n, m] : nf_dims) {
    std::string dims = " (" + std::to_string(n) + "," + std::to_string(m) + ")";
    add("NF1" + dims, family_spec(Family::NF1, n, m));
    for (const char* a : alphas)
      add("NF2" + dims + " alpha=" + a, family_spec(Family::NF2, n, m, a));
    add("NF3" + dims, family_spec(Family::NF3, n, m));
  }
  add("NF4 (6,4)", family_spec(Family::NF4, 6, 4));
  add("NF4 (6,5)", family_spec(Family::NF4, 6, 5));
  add("NF5 (6,5)", family_spec(Family::NF5, 6, 5));
  add("NF5 (7,6)", family_spec(Family::NF5, 7, 6));
  for (std::size_t n = 5; n <= 7; ++n)
    add("A1 n=" + std::to_string(n), family_spec(Family::A1, n, 3));
  add("A2", family_spec(Family::A2, 5, 3));
  add("Z21", family_spec(Family::Z21, 2, 0));
  const std::array<const char*, 4> params{"0", "1", "-1", "2/3"};
  add("Z31", family_spec(Family::Z31, 3, 0));
  add("Z32", family_spec(Family::Z32, 3, 0));
  add("Z33", family_spec(Family::Z33, 3, 0));
  for (const char* b : params)
    add(std::string("Z34 beta=") + b, family_spec(Family::Z34, 3, 0, nullptr, b));
  add("Z35", family_spec(Family::Z35, 3, 0));
  for (const char* a : params)
    add(std::string("z31 alpha=") + a, family_spec(Family::z31, 1, 2, a));
  add("z32", family_spec(Family::z32, 1, 2));
  add("z33", family_spec(Family::z33, 1, 2));
  add("z34", family_spec(Family::z34, 1, 2));
  add("z35", family_spec(Family::z35, 1, 2));
  add("z36", family_spec(Family::z36, 1, 2));
  for (const char* a : params)
    add(std::string("z37 alpha=") + a, family_spec(Family::z37, 1, 2, a));
  add("z38", family_spec(Family::z38, 1, 2));
  add("z39", family_spec(Family::z39, 2, 1));
  return out;
}

}  // namespace zt

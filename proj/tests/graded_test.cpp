#include <doctest.h>

#include "support.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/graded.hpp"

using namespace zinbiel;
using zt::family_spec;

namespace {

using LayerDims = std::vector<std::pair<std::size_t, std::size_t>>;

const AssociatedGraded& expect_graded(const std::variant<AssociatedGraded, GradedViolation>& r) {
  REQUIRE(std::holds_alternative<AssociatedGraded>(r));
  return std::get<AssociatedGraded>(r);
}

}  // namespace

TEST_CASE("filtration flags") {
  SuperAlgebra alg = build(family_spec(Family::NF2, 7, 5, "0"));
  Filtration flags = filtration(alg);
  std::vector<std::size_t> even_dims, odd_dims;
  for (const auto& s : flags.even) even_dims.push_back(s.dim());
  for (const auto& s : flags.odd) odd_dims.push_back(s.dim());
  CHECK(even_dims == std::vector<std::size_t>{7, 5, 4, 3, 2, 1, 0});
  CHECK(odd_dims == std::vector<std::size_t>{5, 4, 3, 2, 1, 0});

  Filtration zero_flags = filtration(SuperAlgebra(3, 2));
  CHECK(zero_flags.even.size() == 2);
  CHECK(zero_flags.even[0].dim() == 3);
  CHECK(zero_flags.even[1].dim() == 0);

  Filtration nfs = filtration(build(family_spec(Family::NullFiliformSuper, 2, 3)));
  std::vector<std::size_t> nfs_even;
  for (const auto& s : nfs.even) nfs_even.push_back(s.dim());
  CHECK(nfs_even == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("associated graded layer dims") {
  SUBCASE("nf1 at (6,5): five layers, both chains persist to the top") {
    auto ag = expect_graded(associated_graded(build(family_spec(Family::NF1, 6, 5))));
    CHECK(ag.layers.dims == LayerDims{{2, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}});
  }
  SUBCASE("nf1 at (6,4): trailing even-only layer") {
    auto ag = expect_graded(associated_graded(build(family_spec(Family::NF1, 6, 4))));
    CHECK(ag.layers.dims == LayerDims{{2, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 0}});
  }
  SUBCASE("zero algebra: a single layer carrying everything") {
    auto ag = expect_graded(associated_graded(SuperAlgebra(2, 1)));
    CHECK(ag.layers.dims == LayerDims{{2, 1}});
    CHECK(ag.algebra == SuperAlgebra(2, 1));
  }
  SUBCASE("null-filiform chain is its own gr") {
    SuperAlgebra alg = build(family_spec(Family::NullFiliformAlg, 5, 0));
    auto ag = expect_graded(associated_graded(alg));
    CHECK(ag.layers.dims == LayerDims{{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}});
    CHECK(ag.algebra == alg);
  }
}

TEST_CASE("layer violations") {
  // z33: the product f1 f1 = e1 lands in layer 1, not layer 2.
  auto r = associated_graded(build(family_spec(Family::z33, 1, 2)));
  REQUIRE(std::holds_alternative<GradedViolation>(r));
  const auto& v = std::get<GradedViolation>(r);
  CHECK(v.layer_left == 1);
  CHECK(v.layer_right == 1);
  CHECK(!v.product.is_zero());
}

TEST_CASE("natural grading verdicts") {
  CHECK(natural_grading_verdict(build(family_spec(Family::NF1, 6, 4))).verdict ==
        GradingVerdict::yes);
  CHECK(natural_grading_verdict(build(family_spec(Family::NF5, 7, 6))).verdict ==
        GradingVerdict::yes);
  CHECK(natural_grading_verdict(build(family_spec(Family::A2, 5, 3))).verdict ==
        GradingVerdict::yes);
  CHECK(natural_grading_verdict(build(family_spec(Family::z39, 2, 1))).verdict ==
        GradingVerdict::yes);
  CHECK(natural_grading_verdict(build(family_spec(Family::z35, 1, 2))).verdict ==
        GradingVerdict::no);
  CHECK(natural_grading_verdict(build(family_spec(Family::z33, 1, 2))).verdict ==
        GradingVerdict::no);
  // the odd-generated chain fails the layer condition: f1 f1 sits in layer 1
  CHECK(natural_grading_verdict(build(family_spec(Family::NullFiliformSuper, 2, 3))).verdict ==
        GradingVerdict::no);
}

TEST_CASE("gr is a fixed point and stays Zinbiel") {
  const FamilySpec specs[] = {family_spec(Family::NF3, 6, 5), family_spec(Family::A1, 6, 3),
                              family_spec(Family::z39, 2, 1),
                              family_spec(Family::NullFiliformAlg, 6, 0)};
  for (const auto& spec : specs) {
    auto ag = expect_graded(associated_graded(build(spec)));
    CHECK(is_zinbiel(ag.algebra));
    auto ag2 = expect_graded(associated_graded(ag.algebra));
    CHECK(ag2.algebra == ag.algebra);
    CHECK(ag2.layers.dims == ag.layers.dims);
    // layer dims sum to the graded dimensions
    std::size_t ev = 0, od = 0;
    for (auto [a, b] : ag.layers.dims) {
      ev += a;
      od += b;
    }
    CHECK(ev == ag.algebra.dim_even());
    CHECK(od == ag.algebra.dim_odd());
  }
}

TEST_CASE("layer dims are transport invariants") {
  zt::SplitMix64 rng(61);
  SuperAlgebra alg = build(family_spec(Family::NF1, 6, 4));
  auto base = expect_graded(associated_graded(alg)).layers.dims;
  for (int k = 0; k < 5; ++k) {
    SuperAlgebra moved = transport(alg, zt::random_graded_map(rng, 6, 4));
    CHECK(expect_graded(associated_graded(moved)).layers.dims == base);
  }
}

TEST_CASE("non-nilpotent input is reported") {
  SuperAlgebra idem = zt::make_algebra(1, 0, {{"e1", "e1", "e1", "1"}});
  CHECK_THROWS_AS(associated_graded(idem), std::domain_error);
}

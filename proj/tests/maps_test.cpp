#include <doctest.h>

#include "support.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/maps.hpp"
#include "zinbiel/polysys.hpp"

using namespace zinbiel;
using zt::basis_of;
using zt::family_spec;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> r;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    std::vector<Rational> v;
    for (const char* s : row) v.push_back(Rational::parse(s));
    cols = v.size();
    r.push_back(std::move(v));
  }
  return Matrix::from_rows(r, cols);
}

SuperAlgebra family_algebra(SolutionFamily fam, const FamilyParams& params) {
  return algebra_from_assignment(2, family_assignment(fam, params));
}

}  // namespace

TEST_CASE("graded map construction") {
  CHECK_THROWS_AS(GradedLinearMap(Matrix(2, 2), Matrix::identity(1)), std::invalid_argument);
  CHECK_THROWS_AS(GradedLinearMap(Matrix::identity(2), Matrix(1, 2)), std::invalid_argument);
  GradedLinearMap id = GradedLinearMap::identity(2, 1);
  CHECK(id.even_block() == Matrix::identity(2));
}

TEST_CASE("transport") {
  SUBCASE("identity map preserves the table") {
    SuperAlgebra alg = build(family_spec(Family::NF2, 6, 4, "1"));
    CHECK(transport(alg, GradedLinearMap::identity(6, 4)) == alg);
  }
  SUBCASE("odd scaling on z33") {
    // P(f1) = 2 f1 pushes f1 f1 = e1 to f1 f1 = 1/4 e1.
    SuperAlgebra alg = build(family_spec(Family::z33, 1, 2));
    GradedLinearMap p(Matrix::identity(1), mat({{"2", "0"}, {"0", "1"}}));
    SuperAlgebra moved = transport(alg, p);
    CHECK(moved.product(f_label(1), f_label(1)) == Rational(1, 4) * basis_of(alg, "e1"));
  }
  SUBCASE("composition") {
    zt::SplitMix64 rng(67);
    SuperAlgebra alg = build(family_spec(Family::z35, 1, 2));
    for (int k = 0; k < 8; ++k) {
      GradedLinearMap p = zt::random_graded_map(rng, 1, 2);
      GradedLinearMap q = zt::random_graded_map(rng, 1, 2);
      CHECK(transport(alg, p.compose(q)) == transport(transport(alg, q), p));
    }
  }
  SUBCASE("dimension mismatch") {
    SuperAlgebra alg(1, 2);
    CHECK_THROWS_AS(transport(alg, GradedLinearMap::identity(2, 2)), std::invalid_argument);
  }
}

TEST_CASE("explicit reduction isomorphisms") {
  SUBCASE("family (b) onto family (e)") {
    Rational l11(1), l12(2), mu(3);
    SuperAlgebra a = family_algebra(SolutionFamily::b, {{"l11", l11}, {"l12", l12}, {"mu", mu}});
    SuperAlgebra b =
        family_algebra(SolutionFamily::e, {{"mu", -mu}, {"mup", l12 * l12 / l11}});
    GradedLinearMap phi1(Matrix::identity(1), mat({{"1/2", "1"}, {"0", "1"}}));
    CHECK(is_isomorphism(a, b, phi1).ok);
  }
  SUBCASE("family (c) onto family (g) with mup = 0") {
    Rational mu(1), mup(2);
    SuperAlgebra a = family_algebra(SolutionFamily::c, {{"mu", mu}, {"mup", mup}});
    SuperAlgebra b = family_algebra(SolutionFamily::g, {{"mu", mu}, {"mup", Rational(0)}});
    Rational q = mu / mup;
    GradedLinearMap phi2(Matrix::identity(1),
                         mat({{q.str().c_str(), "1"}, {q.str().c_str(), "0"}}));
    CHECK(is_isomorphism(a, b, phi2).ok);
  }
  SUBCASE("family (d) onto family (g) with mup = nu") {
    Rational mu(3), nu(1), nup(2);
    SuperAlgebra a =
        family_algebra(SolutionFamily::d, {{"mu", mu}, {"nu", nu}, {"nup", nup}});
    SuperAlgebra b = family_algebra(SolutionFamily::g, {{"mu", mu}, {"mup", nu}});
    Rational q = nup / nu;
    GradedLinearMap phi3(Matrix::identity(1),
                         mat({{"1", q.str().c_str()}, {"0", (-q).str().c_str()}}));
    CHECK(is_isomorphism(a, b, phi3).ok);
  }
  SUBCASE("family (e) at mu = 0 rescales onto z33") {
    Rational mup(7);
    SuperAlgebra a = family_algebra(SolutionFamily::e, {{"mu", Rational(0)}, {"mup", mup}});
    GradedLinearMap phi(mat({{(Rational(1) / mup).str().c_str()}}), Matrix::identity(2));
    CHECK(is_isomorphism(a, build(family_spec(Family::z33, 1, 2)), phi).ok);
  }
  SUBCASE("square-parameter reduction onto z39") {
    // e1e1 = e2, f1f1 = 4 e2 maps onto the unit table when the parameter is
    // a rational square.
    SuperAlgebra a =
        zt::make_algebra(2, 1, {{"e1", "e1", "e2", "1"}, {"f1", "f1", "e2", "4"}});
    GradedLinearMap phi(mat({{"1/2", "0"}, {"0", "1/4"}}), Matrix::identity(1));
    CHECK(is_isomorphism(a, build(family_spec(Family::z39, 2, 1)), phi).ok);
  }
  SUBCASE("distinct tables fail with a witness pair") {
    auto check = is_isomorphism(build(family_spec(Family::z33, 1, 2)),
                                build(family_spec(Family::z34, 1, 2)),
                                GradedLinearMap::identity(1, 2));
    CHECK(!check.ok);
    REQUIRE(check.failing_pair.has_value());
    CHECK(check.failing_pair->first == f_label(1));
    CHECK(check.failing_pair->second == f_label(1));
  }
}

TEST_CASE("invariant battery") {
  InvariantBattery z33 = invariant_battery(build(family_spec(Family::z33, 1, 2)));
  CHECK(z33.odd_pairing_sym_rank == 1);
  CHECK(z33.odd_pairing_antisym_rank == 0);
  InvariantBattery z34 = invariant_battery(build(family_spec(Family::z34, 1, 2)));
  CHECK(z34.odd_pairing_sym_rank == 0);
  CHECK(z34.odd_pairing_antisym_rank == 1);
  InvariantBattery zero = invariant_battery(SuperAlgebra(2, 2));
  CHECK(zero.odd_pairing_sym_rank == 0);
  CHECK(zero.nilpotency == 2);
  CHECK(zero.annihilator_dims[2] == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("distinguish") {
  auto alg = [](Family f) { return build(zt::family_spec(f, 0, 0)); };
  SUBCASE("designated pairs") {
    auto r1 = distinguish(alg(Family::z33), alg(Family::z34));
    CHECK(r1.distinguishable);
    auto r2 = distinguish(alg(Family::z35), alg(Family::z36));
    CHECK(r2.distinguishable);
    auto r3 = distinguish(alg(Family::z33), alg(Family::z39));
    CHECK(r3.distinguishable);
    CHECK(r3.invariant == "graded_dims");
  }
  SUBCASE("transported copies are inconclusive") {
    zt::SplitMix64 rng(71);
    SuperAlgebra a = alg(Family::z35);
    for (int k = 0; k < 5; ++k) {
      SuperAlgebra moved = transport(a, zt::random_graded_map(rng, 1, 2));
      auto r = distinguish(a, moved);
      CHECK(!r.distinguishable);
      CHECK(invariant_battery(a) == invariant_battery(moved));
    }
  }
  SUBCASE("total dimension mismatch is an error") {
    CHECK_THROWS_AS(distinguish(SuperAlgebra(1, 1), SuperAlgebra(2, 1)), std::invalid_argument);
  }
}

TEST_CASE("batteries agree across verified isomorphisms") {
  Rational l11(2), l12(1), mu(5);
  SuperAlgebra a = family_algebra(SolutionFamily::b, {{"l11", l11}, {"l12", l12}, {"mu", mu}});
  SuperAlgebra b = family_algebra(SolutionFamily::e, {{"mu", -mu}, {"mup", l12 * l12 / l11}});
  GradedLinearMap phi1(Matrix::identity(1), mat({{"2", "1"}, {"0", "1"}}));
  REQUIRE(is_isomorphism(a, b, phi1).ok);
  CHECK(invariant_battery(a) == invariant_battery(b));
}

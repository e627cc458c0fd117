#include <doctest.h>

#include "support.hpp"
#include "zinbiel/subspace.hpp"

using namespace zinbiel;

namespace {

std::vector<Rational> vec(std::initializer_list<long> xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

// Random span plus a second generating set of the same space obtained by
// invertible recombination of the generators.
std::pair<Subspace, Subspace> same_space_two_ways(zt::SplitMix64& rng, std::size_t ambient) {
  std::size_t count = 1 + rng.next_below(ambient);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Rational> v(ambient);
    for (auto& x : v) x = random_rational(rng, 3, 2);
    gens.push_back(std::move(v));
  }
  Matrix g = Matrix::from_rows(gens, ambient);
  Matrix p = zt::random_invertible(rng, count);
  Matrix recombined = p * g;
  std::vector<std::vector<Rational>> gens2;
  for (std::size_t i = 0; i < count; ++i) gens2.push_back(recombined.row(i));
  return {Subspace::span(gens, ambient), Subspace::span(gens2, ambient)};
}

}  // namespace

TEST_CASE("span examples") {
  Subspace s = Subspace::span({vec({1, 0}), vec({2, 0})}, 2);
  CHECK(s.dim() == 1);
  CHECK(s.basis().row(0) == vec({1, 0}));

  Subspace x = Subspace::span({vec({1, 0})}, 2);
  Subspace y = Subspace::span({vec({0, 1})}, 2);
  CHECK(sum(x, y) == Subspace::full(2));

  Subspace line = Subspace::span({vec({1, 2})}, 2);
  CHECK(line.contains(vec({2, 4})));
  CHECK(!line.contains(vec({1, 1})));
}

TEST_CASE("span validates vector lengths") {
  CHECK_THROWS_AS(Subspace::span({vec({1, 0, 0})}, 2), std::invalid_argument);
}

TEST_CASE("canonical bases are identical exactly for equal spans") {
  zt::SplitMix64 rng(23);
  for (int k = 0; k < 30; ++k) {
    auto [u, v] = same_space_two_ways(rng, 2 + rng.next_below(4));
    CHECK(u == v);
    CHECK(u.contains(v));
    CHECK(v.contains(u));
  }
}

TEST_CASE("sum and intersection dimensions") {
  zt::SplitMix64 rng(29);
  for (int k = 0; k < 30; ++k) {
    std::size_t ambient = 2 + rng.next_below(4);
    Subspace u = same_space_two_ways(rng, ambient).first;
    Subspace v = same_space_two_ways(rng, ambient).first;
    Subspace s = sum(u, v);
    Subspace w = intersect(u, v);
    CHECK(u.dim() + v.dim() == s.dim() + w.dim());
    CHECK(u.contains(w));
    CHECK(v.contains(w));
    CHECK(s.contains(u));
    CHECK(s.contains(v));
  }
}

TEST_CASE("pivots are strictly increasing with unit entries") {
  zt::SplitMix64 rng(31);
  for (int k = 0; k < 20; ++k) {
    Subspace u = same_space_two_ways(rng, 2 + rng.next_below(4)).first;
    auto piv = u.pivots();
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (i > 0) CHECK(piv[i - 1] < piv[i]);
      CHECK(u.basis().at(i, piv[i]) == Rational(1));
      for (std::size_t r = 0; r < u.dim(); ++r)
        if (r != i) CHECK(u.basis().at(r, piv[i]).is_zero());
    }
  }
}

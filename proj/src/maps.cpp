#include "zinbiel/maps.hpp"

#include <stdexcept>

#include "zinbiel/series.hpp"
#include "zinbiel/structure.hpp"

namespace zinbiel {

GradedLinearMap::GradedLinearMap(Matrix even_block, Matrix odd_block)
    : even_(std::move(even_block)), odd_(std::move(odd_block)) {
  if (even_.rows() != even_.cols() || odd_.rows() != odd_.cols())
    throw std::invalid_argument("graded map blocks must be square");
  if (even_.rows() > 0 && determinant(even_).is_zero())
    throw std::invalid_argument("graded map: singular even block");
  if (odd_.rows() > 0 && determinant(odd_).is_zero())
    throw std::invalid_argument("graded map: singular odd block");
}

GradedLinearMap GradedLinearMap::identity(std::size_t n, std::size_t m) {
  return GradedLinearMap(Matrix::identity(n), Matrix::identity(m));
}

SuperElement GradedLinearMap::apply(const SuperElement& x) const {
  if (x.dim_even() != even_.rows() || x.dim_odd() != odd_.rows())
    throw std::invalid_argument("graded map: element dimension mismatch");
  return SuperElement(even_.apply(x.even()), odd_.apply(x.odd()));
}

GradedLinearMap GradedLinearMap::inverse() const {
  return GradedLinearMap(zinbiel::inverse(even_), zinbiel::inverse(odd_));
}

GradedLinearMap GradedLinearMap::compose(const GradedLinearMap& inner) const {
  return GradedLinearMap(even_ * inner.even_, odd_ * inner.odd_);
}

SuperAlgebra transport(const SuperAlgebra& alg, const GradedLinearMap& p) {
  const std::size_t n = alg.dim_even();
  const std::size_t m = alg.dim_odd();
  if (p.even_block().rows() != n || p.odd_block().rows() != m)
    throw std::invalid_argument("transport: map dimension mismatch");
  GradedLinearMap pinv = p.inverse();
  SuperAlgebra out(n, m);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    SuperElement xi = pinv.apply(SuperElement::basis(n, m, alg.label(i)));
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      SuperElement yj = pinv.apply(SuperElement::basis(n, m, alg.label(j)));
      SuperElement w = p.apply(alg.multiply(xi, yj));
      if (!w.is_zero()) out.set_product(alg.label(i), alg.label(j), std::move(w));
    }
  }
  return out;
}

IsomorphismCheck is_isomorphism(const SuperAlgebra& a, const SuperAlgebra& b,
                                const GradedLinearMap& p) {
  if (a.dim_even() != b.dim_even() || a.dim_odd() != b.dim_odd())
    throw std::invalid_argument("is_isomorphism: graded dimension mismatch");
  SuperAlgebra t = transport(a, p);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(t.product(i, j) == b.product(i, j)))
        return {false, std::make_pair(a.label(i), a.label(j))};
  return {true, std::nullopt};
}

namespace {

std::pair<std::size_t, std::size_t> graded_dims(const Subspace& s, std::size_t n) {
  std::size_t ev = 0, od = 0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto row = s.basis().row(i);
    bool has_even = false, has_odd = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      (j < n ? has_even : has_odd) = true;
    }
    if (has_even && !has_odd) ++ev;
    if (has_odd && !has_even) ++od;
  }
  return {ev, od};
}

}  // namespace

InvariantBattery invariant_battery(const SuperAlgebra& alg, std::uint64_t seed) {
  InvariantBattery b;
  b.dim_even = alg.dim_even();
  b.dim_odd = alg.dim_odd();
  PowerSequence seq = power_sequence(alg);
  for (const auto& s : seq.full) b.power_dims.push_back(graded_dims(s, alg.dim_even()));
  b.even_chain_dims = chain_dims(seq.even_chain);
  b.odd_chain_dims = chain_dims(seq.odd_chain);
  b.nilpotency = seq.full.back().dim() == 0 ? std::optional<std::size_t>(seq.full.size())
                                            : std::nullopt;
  AnnihilatorReport ann = annihilators(alg);
  b.annihilator_dims = {graded_dims(ann.left, alg.dim_even()),
                        graded_dims(ann.right, alg.dim_even()),
                        graded_dims(ann.two_sided, alg.dim_even())};

  std::vector<std::vector<Rational>> sym_gens, antisym_gens;
  for (std::size_t i = 1; i <= alg.dim_odd(); ++i)
    for (std::size_t j = 1; j <= alg.dim_odd(); ++j) {
      const SuperElement& pij = alg.product(f_label(i), f_label(j));
      const SuperElement& pji = alg.product(f_label(j), f_label(i));
      sym_gens.push_back((pij + pji).flat());
      antisym_gens.push_back((pij - pji).flat());
    }
  b.odd_pairing_sym_rank = Subspace::span(sym_gens, alg.dim()).dim();
  b.odd_pairing_antisym_rank = Subspace::span(antisym_gens, alg.dim()).dim();
  b.dim_even_square = seq.even_chain.size() > 1 ? seq.even_chain[1].dim() : 0;
  try {
    b.char_seq = characteristic_sequence(alg, seed).seq;
  } catch (const std::domain_error&) {
    b.char_seq = std::nullopt;  // even part degenerate
  }
  return b;
}

DistinguishResult distinguish(const SuperAlgebra& a, const SuperAlgebra& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) throw std::invalid_argument("distinguish: total dimension mismatch");
  InvariantBattery x = invariant_battery(a, seed);
  InvariantBattery y = invariant_battery(b, seed);
  if (x.dim_even != y.dim_even || x.dim_odd != y.dim_odd) return {true, "graded_dims"};
  if (x.power_dims != y.power_dims) return {true, "power_dims"};
  if (x.even_chain_dims != y.even_chain_dims) return {true, "even_chain_dims"};
  if (x.odd_chain_dims != y.odd_chain_dims) return {true, "odd_chain_dims"};
  if (x.nilpotency != y.nilpotency) return {true, "nilpotency_index"};
  if (x.annihilator_dims != y.annihilator_dims) return {true, "annihilator_dims"};
  if (x.odd_pairing_sym_rank != y.odd_pairing_sym_rank ||
      x.odd_pairing_antisym_rank != y.odd_pairing_antisym_rank)
    return {true, "odd_pairing_ranks"};
  if (x.dim_even_square != y.dim_even_square) return {true, "dim_even_square"};
  if (x.char_seq != y.char_seq) return {true, "char_sequence"};
  return {false, "inconclusive"};
}

}  // namespace zinbiel

#include "zinbiel/series.hpp"

namespace zinbiel {

namespace {

Subspace even_part_subspace(const SuperAlgebra& alg) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < alg.dim_even(); ++i)
    rows.push_back(SuperElement::basis(alg.dim_even(), alg.dim_odd(), e_label(i + 1)).flat());
  return Subspace::span(rows, alg.dim());
}

Subspace odd_part_subspace(const SuperAlgebra& alg) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < alg.dim_odd(); ++i)
    rows.push_back(SuperElement::basis(alg.dim_even(), alg.dim_odd(), f_label(i + 1)).flat());
  return Subspace::span(rows, alg.dim());
}

// Iterates cur <- left * cur until zero (appended) or stabilization.
std::vector<Subspace> descend(const SuperAlgebra& alg, const Subspace& left, Subspace cur) {
  std::vector<Subspace> chain{cur};
  while (chain.back().dim() > 0) {
    Subspace next = alg.product_subspace(left, chain.back());
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace

std::vector<std::size_t> chain_dims(const std::vector<Subspace>& chain) {
  std::vector<std::size_t> out;
  out.reserve(chain.size());
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

Subspace product_subspace(const SuperAlgebra& alg, const Subspace& u, const Subspace& v) {
  return alg.product_subspace(u, v);
}

PowerSequence power_sequence(const SuperAlgebra& alg) {
  PowerSequence seq;
  Subspace ambient = Subspace::full(alg.dim());
  Subspace ev = even_part_subspace(alg);
  seq.full = descend(alg, ambient, ambient);
  seq.even_chain = descend(alg, ev, ev);
  seq.odd_chain = descend(alg, ev, odd_part_subspace(alg));
  return seq;
}

std::optional<std::size_t> nilpotency_index(const SuperAlgebra& alg) {
  auto full = power_sequence(alg).full;
  if (full.back().dim() != 0) return std::nullopt;
  return full.size();
}

bool is_solvable(const SuperAlgebra& alg) {
  Subspace cur = Subspace::full(alg.dim());
  while (cur.dim() > 0) {
    Subspace next = alg.product_subspace(cur, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_null_filiform(const SuperAlgebra& alg) {
  auto full = power_sequence(alg).full;
  if (full.back().dim() != 0) return false;
  const std::size_t d = alg.dim();
  if (full.size() != d + 1) return false;
  for (std::size_t i = 0; i < full.size(); ++i)
    if (full[i].dim() != d - i) return false;
  return true;
}

}  // namespace zinbiel

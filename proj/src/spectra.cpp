#include "zinbiel/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "zinbiel/rng.hpp"
#include "zinbiel/series.hpp"

namespace zinbiel {

std::pair<Matrix, Matrix> left_mult_matrices(const SuperAlgebra& alg, const SuperElement& x) {
  if (!x.odd_part_zero()) throw std::invalid_argument("left_mult_matrices: x must be even");
  const std::size_t n = alg.dim_even();
  const std::size_t m = alg.dim_odd();
  Matrix m0(n, n);
  Matrix m1(m, m);
  for (std::size_t j = 0; j < n; ++j) {
    SuperElement w = alg.multiply(x, SuperElement::basis(n, m, e_label(j + 1)));
    for (std::size_t i = 0; i < n; ++i) m0.at(i, j) = w.even()[i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    SuperElement w = alg.multiply(x, SuperElement::basis(n, m, f_label(j + 1)));
    for (std::size_t i = 0; i < m; ++i) m1.at(i, j) = w.odd()[i];
  }
  return {std::move(m0), std::move(m1)};
}

std::vector<std::size_t> jordan_blocks(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan_blocks: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> ranks{n};
  Matrix power = m;
  while (ranks.back() > 0) {
    std::size_t r = rank(power);
    if (r == ranks.back()) throw std::domain_error("jordan_blocks: matrix is not nilpotent");
    ranks.push_back(r);
    if (ranks.size() > n + 1) throw std::domain_error("jordan_blocks: matrix is not nilpotent");
    if (r > 0) power = power * m;
  }
  // d[k] = #blocks of size >= k+1
  std::vector<std::size_t> d;
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) d.push_back(ranks[k] - ranks[k + 1]);
  std::vector<std::size_t> blocks;
  for (std::size_t k = d.size(); k >= 1; --k) {
    std::size_t count = d[k - 1] - (k < d.size() ? d[k] : 0);
    for (std::size_t c = 0; c < count; ++c) blocks.push_back(k);
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

namespace {

Subspace even_square(const SuperAlgebra& alg) {
  auto chains = power_sequence(alg).even_chain;
  return chains.size() > 1 ? chains[1] : Subspace::zero(alg.dim());
}

}  // namespace

CharSequence char_sequence_at(const SuperAlgebra& alg, const SuperElement& x) {
  if (!x.odd_part_zero()) throw std::invalid_argument("char_sequence_at: x must be even");
  if (even_square(alg).contains(x.flat()))
    throw std::invalid_argument("char_sequence_at: x lies in Z0^2");
  auto [m0, m1] = left_mult_matrices(alg, x);
  return CharSequence{jordan_blocks(m0), jordan_blocks(m1)};
}

CharSequenceScan characteristic_sequence(const SuperAlgebra& alg, std::uint64_t seed,
                                         std::size_t random_candidates) {
  const std::size_t n = alg.dim_even();
  const std::size_t m = alg.dim_odd();
  Subspace z0sq = even_square(alg);

  std::vector<SuperElement> candidates;
  auto push = [&](SuperElement x) {
    if (!z0sq.contains(x.flat())) candidates.push_back(std::move(x));
  };
  for (std::size_t i = 0; i < n; ++i) push(SuperElement::basis(n, m, e_label(i + 1)));
  const Rational tweaks[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const Rational& q : tweaks) {
        SuperElement x = SuperElement::basis(n, m, e_label(i + 1)) +
                         q * SuperElement::basis(n, m, e_label(j + 1));
        push(std::move(x));
      }
    }
  SplitMix64 rng(seed);
  for (std::size_t k = 0; k < random_candidates; ++k) {
    std::vector<Rational> even(n);
    for (auto& c : even) c = random_rational(rng);
    push(SuperElement(std::move(even), std::vector<Rational>(m)));
  }
  if (candidates.empty())
    throw std::domain_error("characteristic_sequence: even part lies inside Z0^2");

  std::optional<CharSequenceScan> best;
  std::vector<std::size_t> best_c0, best_c1;
  for (const auto& x : candidates) {
    CharSequence cs;
    try {
      auto [m0, m1] = left_mult_matrices(alg, x);
      cs = CharSequence{jordan_blocks(m0), jordan_blocks(m1)};
    } catch (const std::domain_error&) {
      continue;  // L_x not nilpotent at this candidate (non-Zinbiel input)
    }
    best_c0 = std::max(best_c0, cs.c0);
    best_c1 = std::max(best_c1, cs.c1);
    if (!best || best->seq < cs) best = CharSequenceScan{cs, x, true};
  }
  if (!best) throw std::domain_error("characteristic_sequence: no candidate has nilpotent L_x");
  best->simultaneous = best->seq.c0 == best_c0 && best->seq.c1 == best_c1;
  return *best;
}

FiliformResult is_filiform(const SuperAlgebra& alg, std::uint64_t seed) {
  const std::size_t n = alg.dim_even();
  const std::size_t m = alg.dim_odd();
  if (n < 2) return {FiliformVerdict::no, std::nullopt};
  std::vector<std::size_t> target_c0{n - 1};
  target_c0.push_back(1);
  std::vector<std::size_t> target_c1;
  if (m > 0) target_c1.push_back(m);

  // Chain bounds certify impossibility: a block of size s at an even x needs
  // L_x^{s-1} != 0, and L_x^k maps Z0 into Z0^{k+1} and Z1 into Z1^{k+1}.
  auto seq = power_sequence(alg);
  auto nonzero_terms = [](const std::vector<Subspace>& chain) {
    std::size_t count = 0;
    for (const auto& s : chain)
      if (s.dim() > 0) ++count;
    return count;
  };
  if (n >= 2 && nonzero_terms(seq.even_chain) < n - 1) return {FiliformVerdict::no, std::nullopt};
  if (m >= 2 && nonzero_terms(seq.odd_chain) < m) return {FiliformVerdict::no, std::nullopt};

  CharSequenceScan scan;
  try {
    scan = characteristic_sequence(alg, seed);
  } catch (const std::domain_error&) {
    return {FiliformVerdict::unknown, std::nullopt};
  }
  if (scan.seq.c0 == target_c0 && scan.seq.c1 == target_c1)
    return {FiliformVerdict::yes, scan.witness};
  if (scan.seq.c0 > target_c0) return {FiliformVerdict::no, std::nullopt};
  return {FiliformVerdict::unknown, std::nullopt};
}

}  // namespace zinbiel

#include "zinbiel/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "zinbiel/series.hpp"

namespace zinbiel {

Filtration filtration(const SuperAlgebra& alg) {
  PowerSequence seq = power_sequence(alg);
  return {std::move(seq.even_chain), std::move(seq.odd_chain)};
}

namespace {

const Subspace& flag_at(const std::vector<Subspace>& flag, std::size_t k) {
  // k is 0-based; past the listed chain the flag is constant (its last term).
  return k < flag.size() ? flag[k] : flag.back();
}

// Complement representatives of flag step k: echelon rows of flag[k] whose
// pivots are not pivots of flag[k+1].
std::vector<std::vector<Rational>> layer_reps(const std::vector<Subspace>& flag, std::size_t k) {
  const Subspace& top = flag_at(flag, k);
  const Subspace& bottom = flag_at(flag, k + 1);
  auto bottom_pivots = bottom.pivots();
  std::vector<std::vector<Rational>> reps;
  auto top_pivots = top.pivots();
  for (std::size_t r = 0; r < top.dim(); ++r) {
    bool in_bottom = std::find(bottom_pivots.begin(), bottom_pivots.end(), top_pivots[r]) !=
                     bottom_pivots.end();
    if (!in_bottom) reps.push_back(top.basis().row(r));
  }
  return reps;
}

}  // namespace

std::variant<AssociatedGraded, GradedViolation> associated_graded(const SuperAlgebra& alg) {
  const std::size_t n = alg.dim_even();
  const std::size_t m = alg.dim_odd();
  Filtration flags = filtration(alg);
  if (flags.even.back().dim() != 0 || flags.odd.back().dim() != 0)
    throw std::domain_error("associated_graded: filtration does not exhaust the algebra");
  // Chains end with their zero term, so layers 1..len-1 carry everything.
  std::size_t layer_count = std::max(flags.even.size(), flags.odd.size());
  if (layer_count > 0) --layer_count;

  struct Rep {
    std::size_t layer;  // 1-based
    Parity parity;
    SuperElement vec;
  };
  std::vector<Rep> reps;
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  std::vector<std::vector<Rational>> even_cols, odd_cols;
  for (std::size_t k = 0; k < layer_count; ++k) {
    auto ev = layer_reps(flags.even, k);
    auto od = layer_reps(flags.odd, k);
    dims.emplace_back(ev.size(), od.size());
    for (auto& v : ev) {
      even_cols.push_back(v);
      reps.push_back({k + 1, Parity::even, SuperElement::from_flat(n, m, v)});
    }
    for (auto& v : od) {
      odd_cols.push_back(v);
      reps.push_back({k + 1, Parity::odd, SuperElement::from_flat(n, m, v)});
    }
  }

  // Adapted map: column i of the even block is the i-th even representative
  // (even flat coordinates only; representatives of the even flag are purely
  // even, same for odd).
  Matrix pe(n, n), po(m, m);
  for (std::size_t c = 0; c < even_cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) pe.at(r, c) = even_cols[c][r];
  for (std::size_t c = 0; c < odd_cols.size(); ++c)
    for (std::size_t r = 0; r < m; ++r) po.at(r, c) = odd_cols[c][r + n];
  GradedLinearMap adapted(std::move(pe), std::move(po));

  // Sort representatives into gr's basis slots: even slots in layer order,
  // then odd slots in layer order.
  std::vector<const Rep*> even_slots, odd_slots;
  for (const auto& r : reps) (r.parity == Parity::even ? even_slots : odd_slots).push_back(&r);

  auto level_contains = [&](std::size_t level, const SuperElement& w) {
    const Subspace& ev = flag_at(flags.even, level - 1);
    const Subspace& od = flag_at(flags.odd, level - 1);
    return sum(ev, od).contains(w.flat());
  };

  GradedLinearMap adapted_inv = adapted.inverse();
  SuperAlgebra gr(n, m);
  auto slot_label = [&](std::size_t idx) {
    return idx < n ? e_label(idx + 1) : f_label(idx - n + 1);
  };
  std::vector<const Rep*> all_slots = even_slots;
  all_slots.insert(all_slots.end(), odd_slots.begin(), odd_slots.end());
  std::vector<std::size_t> slot_layer(all_slots.size());
  for (std::size_t i = 0; i < all_slots.size(); ++i) slot_layer[i] = all_slots[i]->layer;

  for (std::size_t i = 0; i < all_slots.size(); ++i)
    for (std::size_t j = 0; j < all_slots.size(); ++j) {
      SuperElement w = alg.multiply(all_slots[i]->vec, all_slots[j]->vec);
      std::size_t target = slot_layer[i] + slot_layer[j];
      if (target > layer_count) {
        if (!w.is_zero()) return GradedViolation{slot_layer[i], slot_layer[j], w};
        continue;
      }
      if (!level_contains(target, w)) return GradedViolation{slot_layer[i], slot_layer[j], w};
      // Adapted coordinates of w are supported on layers >= target; keep the
      // layer-(target) block, drop deeper layers (the quotient projection).
      SuperElement coords = adapted_inv.apply(w);
      SuperElement projected(n, m);
      auto flat = coords.flat();
      bool any = false;
      for (std::size_t s = 0; s < all_slots.size(); ++s) {
        if (slot_layer[s] != target || flat[s].is_zero()) continue;
        projected += flat[s] * SuperElement::basis(n, m, slot_label(s));
        any = true;
      }
      if (any) gr.set_product(slot_label(i), slot_label(j), std::move(projected));
    }
  return AssociatedGraded{std::move(gr), GradedLayers{std::move(dims), std::move(adapted)}};
}

GradingReport natural_grading_verdict(const SuperAlgebra& alg) {
  auto result = associated_graded(alg);
  if (std::holds_alternative<GradedViolation>(result)) {
    return {GradingVerdict::no, "layer products escape the filtration",
            std::get<GradedViolation>(result)};
  }
  const auto& ag = std::get<AssociatedGraded>(result);
  SuperAlgebra in_adapted = transport(alg, ag.layers.adapted.inverse());
  if (in_adapted == ag.algebra)
    return {GradingVerdict::yes, "structure constants in the adapted basis equal gr",
            std::nullopt};
  if (invariant_battery(alg) != invariant_battery(ag.algebra))
    return {GradingVerdict::no, "an invariant separates the algebra from gr", std::nullopt};
  return {GradingVerdict::unknown, "gr differs in the adapted basis; no separating invariant found",
          std::nullopt};
}

}  // namespace zinbiel

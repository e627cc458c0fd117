#include "zinbiel/structure.hpp"

#include <stdexcept>

#include "zinbiel/series.hpp"

namespace zinbiel {

namespace {

// Rows of the stacked linear system for {x : x*b_j = 0 for all j} when
// right_factor, or {x : b_j*x = 0 for all j} otherwise.
Subspace annihilator_side(const SuperAlgebra& alg, bool x_on_left) {
  const std::size_t d = alg.dim();
  Matrix stacked(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      auto w = x_on_left ? alg.product(i, j).flat() : alg.product(j, i).flat();
      for (std::size_t k = 0; k < d; ++k) stacked.at(j * d + k, i) = w[k];
    }
  return Subspace::span(kernel_rows(stacked), d);
}

}  // namespace

AnnihilatorReport annihilators(const SuperAlgebra& alg) {
  Subspace left = annihilator_side(alg, true);
  Subspace right = annihilator_side(alg, false);
  Subspace both = intersect(left, right);
  return {std::move(left), std::move(right), std::move(both)};
}

Subspace right_annihilator(const SuperAlgebra& alg, const SuperElement& a) {
  const std::size_t d = alg.dim();
  Matrix la(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto w = alg.multiply(a, SuperElement::basis(alg.dim_even(), alg.dim_odd(), alg.label(j))).flat();
    for (std::size_t i = 0; i < d; ++i) la.at(i, j) = w[i];
  }
  return Subspace::span(kernel_rows(la), d);
}

bool rc_monotonicity_check(const SuperAlgebra& alg, const SuperElement& a1,
                           const SuperElement& a2) {
  if (!a1.is_homogeneous() || !a2.is_homogeneous())
    throw std::invalid_argument("rc_monotonicity_check needs homogeneous arguments");
  Subspace rc1 = right_annihilator(alg, a1);
  Subspace rc12 = right_annihilator(alg, alg.multiply(a1, a2));
  return rc12.contains(rc1);
}

SuperElement find_left_annihilating_homogeneous(const SuperAlgebra& alg) {
  const std::size_t n = alg.dim_even();
  const std::size_t m = alg.dim_odd();
  if (n + m == 0) throw std::domain_error("zero-dimensional algebra has no basis element");

  SuperElement e(n, m);
  if (n == 0) {
    e = SuperElement::basis(n, m, f_label(1));
  } else {
    // Last nonzero even power annihilates Z0 on the right; pick from it a
    // seed that also left-annihilates Z0.
    auto even_chain = power_sequence(alg).even_chain;
    std::size_t last = even_chain.size();
    while (last > 0 && even_chain[last - 1].dim() == 0) --last;
    if (last == 0) throw std::domain_error("even part has no nonzero power");
    const Subspace& seed_space = even_chain[last - 1];
    bool found = false;
    for (std::size_t r = 0; r < seed_space.dim() && !found; ++r) {
      SuperElement cand = alg.element_from_subspace_row(seed_space, r);
      bool kills = true;
      for (std::size_t i = 1; i <= n && kills; ++i)
        kills = alg.multiply(cand, SuperElement::basis(n, m, e_label(i))).is_zero();
      if (kills) {
        e = cand;
        found = true;
      }
    }
    if (!found)
      throw std::domain_error("no even seed annihilates the even part (input not Zinbiel?)");
  }

  // Each replacement strictly enlarges RC(e), so dim+1 rounds suffice.
  for (std::size_t round = 0; round <= n + m; ++round) {
    bool replaced = false;
    for (std::size_t j = 1; j <= m; ++j) {
      SuperElement ex = alg.multiply(e, SuperElement::basis(n, m, f_label(j)));
      if (!ex.is_zero()) {
        e = std::move(ex);
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      bool kills_all = true;
      for (std::size_t i = 0; i < n + m && kills_all; ++i)
        kills_all = alg.multiply(e, SuperElement::basis(n, m, alg.label(i))).is_zero();
      if (!kills_all)
        throw std::domain_error("iteration converged without eZ = 0 (input not Zinbiel?)");
      return e;
    }
  }
  throw std::domain_error("annihilating-element iteration did not terminate (input not Zinbiel?)");
}

bool is_right_ideal(const SuperAlgebra& alg, const Subspace& ideal) {
  if (ideal.ambient_dim() != alg.dim())
    throw std::invalid_argument("is_right_ideal: ambient dimension mismatch");
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    SuperElement u = alg.element_from_subspace_row(ideal, r);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      SuperElement b = SuperElement::basis(alg.dim_even(), alg.dim_odd(), alg.label(j));
      if (!ideal.contains(alg.multiply(u, b).flat())) return false;
    }
  }
  return true;
}

bool is_ideal(const SuperAlgebra& alg, const Subspace& ideal) {
  if (!is_right_ideal(alg, ideal)) return false;
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    SuperElement u = alg.element_from_subspace_row(ideal, r);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      SuperElement b = SuperElement::basis(alg.dim_even(), alg.dim_odd(), alg.label(j));
      if (!ideal.contains(alg.multiply(b, u).flat())) return false;
    }
  }
  return true;
}

Subspace left_product_ideal(const SuperAlgebra& alg, const Subspace& ideal) {
  return alg.product_subspace(Subspace::full(alg.dim()), ideal);
}

MinimalIdealCertificate minimal_graded_ideal(const SuperAlgebra& alg) {
  if (alg.dim() == 0) throw std::domain_error("zero-dimensional algebra has no ideal");
  AnnihilatorReport ann = annihilators(alg);
  if (ann.two_sided.dim() == 0)
    throw std::domain_error("two-sided annihilator is zero (input not Zinbiel?)");
  // Echelon rows of a graded subspace are pure-parity, so the first row is a
  // homogeneous generator.
  SuperElement gen = alg.element_from_subspace_row(ann.two_sided, 0);
  if (!gen.is_homogeneous())
    throw std::domain_error("annihilator basis row is not homogeneous (table not graded?)");
  Subspace ideal = Subspace::span({gen.flat()}, alg.dim());
  bool left_zero = left_product_ideal(alg, ideal).dim() == 0;
  bool right_zero = alg.product_subspace(ideal, Subspace::full(alg.dim())).dim() == 0;
  return {std::move(ideal), gen, gen.homogeneous_parity(), left_zero, right_zero};
}

bool type_n1_structure_check(const SuperAlgebra& alg) {
  if (alg.dim_odd() != 1) throw std::invalid_argument("type check requires a 1-dimensional odd part");
  const std::size_t n = alg.dim_even();
  SuperElement f1 = SuperElement::basis(n, 1, f_label(1));
  for (std::size_t i = 1; i <= n; ++i) {
    SuperElement ei = SuperElement::basis(n, 1, e_label(i));
    if (!alg.multiply(ei, f1).is_zero()) return false;
    if (!alg.multiply(f1, ei).is_zero()) return false;
  }
  SuperElement ff = alg.multiply(f1, f1);
  for (std::size_t i = 1; i <= n; ++i) {
    SuperElement ei = SuperElement::basis(n, 1, e_label(i));
    if (!alg.multiply(ff, ei).is_zero()) return false;
  }
  return true;
}

}  // namespace zinbiel

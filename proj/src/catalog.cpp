#include "zinbiel/catalog.hpp"

#include <stdexcept>

namespace zinbiel {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Rational get_param(const FamilySpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  require(it != spec.params.end(),
          family_id(spec.family) + " requires parameter " + name);
  return it->second;
}

SuperElement scaled_basis(const SuperAlgebra& alg, BasisLabel label, const Rational& c) {
  return c * SuperElement::basis(alg.dim_even(), alg.dim_odd(), label);
}

// e_i e_j = C(i+j-1, j) e_{i+j} on the range lo <= i+j <= hi.
void fill_even_chain(SuperAlgebra& alg, std::size_t lo, std::size_t hi) {
  for (std::size_t i = 1; i <= alg.dim_even(); ++i)
    for (std::size_t j = 1; j <= alg.dim_even(); ++j) {
      std::size_t t = i + j;
      if (t < lo || t > hi || t > alg.dim_even()) continue;
      alg.set_product(e_label(i), e_label(j), scaled_basis(alg, e_label(t), binomial(t - 1, j)));
    }
}

// prod_{k=0}^{count-1} (alpha + j + k + offset)
Rational coefficient_product(const Rational& alpha, std::size_t j, long offset, std::size_t count) {
  Rational p(1);
  for (std::size_t k = 0; k < count; ++k)
    p *= alpha + Rational(static_cast<long>(j) + static_cast<long>(k) + offset);
  return p;
}

// The filiform family backbone: the even chain law on 2 <= i+j <= n-1 and
//   e_i f_j = prod_{k=0}^{i-2}(alpha+j+k)/(i-1)! f_{j+i}
//   f_j e_i = prod_{k=0}^{i-1}(alpha+j+k-1)/i! f_{j+i}     (1 <= i <= n-1)
// plus the optional boundary products
//   e_n f_1 = b1 f_2, f_1 e_n = -b1 f_2, e_n f_{m-1} = bm1 f_m,
//   f_1 f_{n-2} = h e_{n-1}.
SuperAlgebra filiform_family(std::size_t n, std::size_t m, const Rational& alpha,
                             const Rational& b1, const Rational& bm1, const Rational& h) {
  SuperAlgebra alg(n, m);
  fill_even_chain(alg, 2, n - 1);
  for (std::size_t i = 1; i + 1 <= n; ++i)
    for (std::size_t j = 1; j + i <= m; ++j) {
      Rational ef = coefficient_product(alpha, j, 0, i - 1) / factorial(i - 1);
      if (!ef.is_zero()) alg.set_product(e_label(i), f_label(j), scaled_basis(alg, f_label(j + i), ef));
      Rational fe = coefficient_product(alpha, j, -1, i) / factorial(i);
      if (!fe.is_zero()) alg.set_product(f_label(j), e_label(i), scaled_basis(alg, f_label(j + i), fe));
    }
  if (!b1.is_zero() && m >= 2) {
    alg.set_product(e_label(n), f_label(1), scaled_basis(alg, f_label(2), b1));
    alg.set_product(f_label(1), e_label(n), scaled_basis(alg, f_label(2), -b1));
  }
  if (!bm1.is_zero() && m >= 2)
    alg.set_product(e_label(n), f_label(m - 1), scaled_basis(alg, f_label(m), bm1));
  if (!h.is_zero() && n >= 3 && n - 2 <= m)
    alg.set_product(f_label(1), f_label(n - 2), scaled_basis(alg, e_label(n - 1), h));
  return alg;
}

SuperAlgebra null_filiform_alg(std::size_t n) {
  SuperAlgebra alg(n, 0);
  fill_even_chain(alg, 2, n);
  return alg;
}

// Single-chain superalgebra of total dimension d, generated by an odd
// element: chain slot i is odd for odd i (f_{(i+1)/2}) and even for even i
// (e_{i/2}). Products, with C the binomial coefficient:
//   chain(2k+1) chain(2l)   = C(k+l, k) chain(2k+2l+1)
//   chain(2k)   chain(2l)   = C(k+l-1, l) chain(2k+2l)
//   chain(2k+1) chain(2l+1) = C(k+l, l) chain(2k+2l+2)
//   chain(2k)   chain(2l+1) = 0
SuperAlgebra null_filiform_super(std::size_t n, std::size_t m) {
  SuperAlgebra alg(n, m);
  const std::size_t d = n + m;
  auto slot = [&](std::size_t i) { return i % 2 == 1 ? f_label((i + 1) / 2) : e_label(i / 2); };
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= d; ++j) {
      Rational c;
      std::size_t target = 0;
      if (i % 2 == 1 && j % 2 == 0) {
        std::size_t k = (i - 1) / 2, l = j / 2;
        c = binomial(k + l, k);
        target = 2 * k + 2 * l + 1;
      } else if (i % 2 == 0 && j % 2 == 0) {
        std::size_t k = i / 2, l = j / 2;
        c = binomial(k + l - 1, l);
        target = 2 * k + 2 * l;
      } else if (i % 2 == 1 && j % 2 == 1) {
        std::size_t k = (i - 1) / 2, l = (j - 1) / 2;
        c = binomial(k + l, l);
        target = 2 * k + 2 * l + 2;
      } else {
        continue;
      }
      if (target > d || c.is_zero()) continue;
      alg.set_product(slot(i), slot(j), scaled_basis(alg, slot(target), c));
    }
  return alg;
}

SuperAlgebra a1_table(std::size_t n) {
  SuperAlgebra alg(n, 3);
  fill_even_chain(alg, 2, n - 1);
  alg.set_product(e_label(1), f_label(1), scaled_basis(alg, f_label(2), Rational(1)));
  alg.set_product(e_label(1), f_label(2), scaled_basis(alg, f_label(3), Rational(1)));
  alg.set_product(f_label(1), e_label(1), scaled_basis(alg, f_label(2), Rational(-1)));
  alg.set_product(e_label(n), f_label(1), scaled_basis(alg, f_label(2), Rational(1)));
  alg.set_product(e_label(n), f_label(2), scaled_basis(alg, f_label(3), Rational(1)));
  alg.set_product(f_label(1), e_label(n), scaled_basis(alg, f_label(2), Rational(-1)));
  return alg;
}

SuperAlgebra a2_table() {
  SuperAlgebra alg(5, 3);
  fill_even_chain(alg, 2, 4);
  alg.set_product(e_label(1), f_label(1), scaled_basis(alg, f_label(2), Rational(1)));
  alg.set_product(e_label(1), f_label(2), scaled_basis(alg, f_label(3), Rational(1)));
  alg.set_product(e_label(2), f_label(1), scaled_basis(alg, f_label(3), Rational(-1)));
  alg.set_product(f_label(1), e_label(1), scaled_basis(alg, f_label(2), Rational(-2)));
  alg.set_product(f_label(2), e_label(1), scaled_basis(alg, f_label(3), Rational(-1)));
  alg.set_product(f_label(1), e_label(2), scaled_basis(alg, f_label(3), Rational(1)));
  alg.set_product(f_label(1), f_label(3), scaled_basis(alg, e_label(4), Rational(1)));
  return alg;
}

struct Product {
  BasisLabel left, right, target;
  Rational coeff;
};

SuperAlgebra from_products(std::size_t n, std::size_t m, const std::vector<Product>& products) {
  SuperAlgebra alg(n, m);
  for (const auto& p : products)
    alg.set_product(p.left, p.right, scaled_basis(alg, p.target, p.coeff));
  return alg;
}

void check_fixed_dims(const FamilySpec& spec, std::size_t n, std::size_t m) {
  require(spec.n == 0 || spec.n == n,
          family_id(spec.family) + " has fixed even dimension " + std::to_string(n));
  require(spec.m == 0 || spec.m == m,
          family_id(spec.family) + " has fixed odd dimension " + std::to_string(m));
}

}  // namespace

std::string family_id(Family f) {
  switch (f) {
    case Family::NullFiliformAlg: return "NullFiliformAlg";
    case Family::NgFiliformAlg: return "NgFiliformAlg";
    case Family::NullFiliformSuper: return "NullFiliformSuper";
    case Family::NF1: return "NF1";
    case Family::NF2: return "NF2";
    case Family::NF3: return "NF3";
    case Family::NF4: return "NF4";
    case Family::NF5: return "NF5";
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::Z21: return "Z21";
    case Family::Z31: return "Z31";
    case Family::Z32: return "Z32";
    case Family::Z33: return "Z33";
    case Family::Z34: return "Z34";
    case Family::Z35: return "Z35";
    case Family::z31: return "z31";
    case Family::z32: return "z32";
    case Family::z33: return "z33";
    case Family::z34: return "z34";
    case Family::z35: return "z35";
    case Family::z36: return "z36";
    case Family::z37: return "z37";
    case Family::z38: return "z38";
    case Family::z39: return "z39";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_id(const std::string& id) {
  for (const auto& entry : catalog_index())
    if (entry.id == id) return entry.default_spec.family;
  throw std::invalid_argument("unknown family id: \"" + id + "\"");
}

SuperAlgebra build(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  switch (spec.family) {
    case Family::NullFiliformAlg:
      require(n >= 1, "NullFiliformAlg requires n >= 1");
      require(m == 0, "NullFiliformAlg has no odd part");
      return null_filiform_alg(n);
    case Family::NgFiliformAlg:
      require(n >= 5, "NgFiliformAlg requires n >= 5");
      require(m == 0, "NgFiliformAlg has no odd part");
      {
        SuperAlgebra alg(n, 0);
        fill_even_chain(alg, 2, n - 1);
        return alg;
      }
    case Family::NullFiliformSuper:
      require(m >= 1, "NullFiliformSuper requires a nonzero odd part");
      require(m == n || m == n + 1,
              "NullFiliformSuper requires graded dimensions (k,k) or (k,k+1); got (" +
                  std::to_string(n) + "," + std::to_string(m) + ")");
      return null_filiform_super(n, m);
    case Family::NF1:
      require(n >= 5, "NF1 requires n >= 5");
      require(m > 3, "NF1 requires m > 3");
      return filiform_family(n, m, Rational(-1), Rational(1), Rational(0), Rational(0));
    case Family::NF2:
      require(n >= 5, "NF2 requires n >= 5");
      require(m > 3, "NF2 requires m > 3");
      return filiform_family(n, m, get_param(spec, "alpha"), Rational(0), Rational(0), Rational(0));
    case Family::NF3:
      require(n >= 5, "NF3 requires n >= 5");
      require(m > 3, "NF3 requires m > 3");
      return filiform_family(n, m, Rational(2 - static_cast<long>(m)), Rational(0), Rational(1),
                             Rational(0));
    case Family::NF4:
      require(n >= 5, "NF4 requires n >= 5");
      require(m > 3, "NF4 requires m > 3");
      require(m >= n - 2, "NF4 requires m >= n - 2");
      return filiform_family(n, m, Rational(3 - static_cast<long>(n)), Rational(0), Rational(0),
                             Rational(1));
    case Family::NF5:
      require(n >= 5, "NF5 requires n >= 5");
      require(m == n - 1, "NF5 requires m = n - 1");
      return filiform_family(n, m, Rational(3 - static_cast<long>(n)), Rational(0), Rational(1),
                             Rational(1));
    case Family::A1:
      require(n >= 5, "A1 requires n >= 5");
      require(m == 0 || m == 3, "A1 has fixed odd dimension 3");
      return a1_table(n);
    case Family::A2:
      check_fixed_dims(spec, 5, 3);
      return a2_table();
    case Family::Z21:
      check_fixed_dims(spec, 2, 0);
      return from_products(2, 0, {{e_label(1), e_label(1), e_label(2), Rational(1)}});
    case Family::Z31:
      check_fixed_dims(spec, 3, 0);
      return from_products(3, 0, {{e_label(1), e_label(1), e_label(2), Rational(1)}});
    case Family::Z32:
      check_fixed_dims(spec, 3, 0);
      return from_products(3, 0,
                           {{e_label(1), e_label(1), e_label(2), Rational(1)},
                            {e_label(1), e_label(2), e_label(3), Rational(1, 2)},
                            {e_label(2), e_label(1), e_label(3), Rational(1)}});
    case Family::Z33:
      check_fixed_dims(spec, 3, 0);
      return from_products(3, 0,
                           {{e_label(1), e_label(2), e_label(3), Rational(1)},
                            {e_label(2), e_label(1), e_label(3), Rational(-1)}});
    case Family::Z34:
      check_fixed_dims(spec, 3, 0);
      return from_products(3, 0,
                           {{e_label(1), e_label(1), e_label(3), Rational(1)},
                            {e_label(1), e_label(2), e_label(3), Rational(1)},
                            {e_label(2), e_label(2), e_label(3), get_param(spec, "beta")}});
    case Family::Z35:
      check_fixed_dims(spec, 3, 0);
      return from_products(3, 0,
                           {{e_label(1), e_label(1), e_label(3), Rational(1)},
                            {e_label(1), e_label(2), e_label(3), Rational(1)},
                            {e_label(2), e_label(1), e_label(3), Rational(1)}});
    case Family::z31:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2,
                           {{f_label(1), f_label(1), e_label(1), Rational(1)},
                            {f_label(2), f_label(1), e_label(1), Rational(1)},
                            {f_label(2), f_label(2), e_label(1), get_param(spec, "alpha")}});
    case Family::z32:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2,
                           {{f_label(1), f_label(1), e_label(1), Rational(1)},
                            {f_label(2), f_label(2), e_label(1), Rational(1)}});
    case Family::z33:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2, {{f_label(1), f_label(1), e_label(1), Rational(1)}});
    case Family::z34:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2,
                           {{f_label(1), f_label(2), e_label(1), Rational(1)},
                            {f_label(2), f_label(1), e_label(1), Rational(-1)}});
    case Family::z35:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2,
                           {{f_label(1), e_label(1), f_label(2), Rational(1)},
                            {f_label(1), f_label(1), e_label(1), Rational(1)}});
    case Family::z36:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2, {{f_label(1), e_label(1), f_label(2), Rational(1)}});
    case Family::z37:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2,
                           {{e_label(1), f_label(1), f_label(2), get_param(spec, "alpha")},
                            {f_label(1), e_label(1), f_label(2), Rational(1)}});
    case Family::z38:
      check_fixed_dims(spec, 1, 2);
      return from_products(1, 2, {{e_label(1), f_label(1), f_label(2), Rational(1)}});
    case Family::z39:
      check_fixed_dims(spec, 2, 1);
      return from_products(2, 1,
                           {{e_label(1), e_label(1), e_label(2), Rational(1)},
                            {f_label(1), f_label(1), e_label(2), Rational(1)}});
  }
  throw std::invalid_argument("unknown family");
}

std::vector<CatalogEntry> catalog_index() {
  auto spec = [](Family f, std::size_t n, std::size_t m,
                 std::map<std::string, Rational> params = {}) {
    return FamilySpec{f, n, m, std::move(params)};
  };
  Rational one(1);
  return {
      {"NullFiliformAlg", "e_i e_j = C(i+j-1,j) e_{i+j}", "n >= 1",
       spec(Family::NullFiliformAlg, 3, 0)},
      {"NgFiliformAlg", "e_i e_j = C(i+j-1,j) e_{i+j}, 2 <= i+j <= n-1", "n >= 5",
       spec(Family::NgFiliformAlg, 5, 0)},
      {"NullFiliformSuper",
       "single odd-generated chain: c(2k+1)c(2l)=C(k+l,k)c(2k+2l+1), "
       "c(2k)c(2l)=C(k+l-1,l)c(2k+2l), c(2k+1)c(2l+1)=C(k+l,l)c(2k+2l+2)",
       "(n,m) = (k,k) or (k,k+1)", spec(Family::NullFiliformSuper, 1, 2)},
      {"NF1", "even chain law; e_i f_j, f_j e_i at alpha=-1; e_n f1 = f2, f1 e_n = -f2",
       "n >= 5, m > 3", spec(Family::NF1, 5, 4)},
      {"NF2", "even chain law; e_i f_j = prod(alpha+j+k)/(i-1)! f_{j+i}, "
              "f_j e_i = prod(alpha+j+k-1)/i! f_{j+i}",
       "n >= 5, m > 3", spec(Family::NF2, 5, 4, {{"alpha", one}})},
      {"NF3", "even chain law; alpha = 2-m; e_n f_{m-1} = f_m", "n >= 5, m > 3",
       spec(Family::NF3, 5, 4)},
      {"NF4", "even chain law; alpha = 3-n; f1 f_{n-2} = e_{n-1}", "n >= 5, m > 3, m >= n-2",
       spec(Family::NF4, 5, 4)},
      {"NF5", "even chain law; alpha = 3-n; e_n f_{n-2} = f_{n-1}, f1 f_{n-2} = e_{n-1}",
       "n >= 5, m = n-1", spec(Family::NF5, 5, 4)},
      {"A1", "even chain law; e1f1=f2, e1f2=f3, f1e1=-f2, e_nf1=f2, e_nf2=f3, f1e_n=-f2",
       "n >= 5, m = 3", spec(Family::A1, 5, 3)},
      {"A2", "even chain law (n=5); e1f1=f2, e1f2=f3, e2f1=-f3, f1e1=-2f2, f2e1=-f3, "
             "f1e2=f3, f1f3=e4",
       "(n,m) = (5,3)", spec(Family::A2, 5, 3)},
      {"Z21", "e1e1=e2", "(n,m) = (2,0)", spec(Family::Z21, 2, 0)},
      {"Z31", "e1e1=e2 (split null part e3)", "(n,m) = (3,0)", spec(Family::Z31, 3, 0)},
      {"Z32", "e1e1=e2, e1e2=1/2 e3, e2e1=e3", "(n,m) = (3,0)", spec(Family::Z32, 3, 0)},
      {"Z33", "e1e2=e3, e2e1=-e3", "(n,m) = (3,0)", spec(Family::Z33, 3, 0)},
      {"Z34", "e1e1=e3, e1e2=e3, e2e2=beta e3", "(n,m) = (3,0)",
       spec(Family::Z34, 3, 0, {{"beta", one}})},
      {"Z35", "e1e1=e3, e1e2=e3, e2e1=e3", "(n,m) = (3,0)", spec(Family::Z35, 3, 0)},
      {"z31", "f1f1=e1, f2f1=e1, f2f2=alpha e1", "(n,m) = (1,2)",
       spec(Family::z31, 1, 2, {{"alpha", one}})},
      {"z32", "f1f1=e1, f2f2=e1", "(n,m) = (1,2)", spec(Family::z32, 1, 2)},
      {"z33", "f1f1=e1", "(n,m) = (1,2)", spec(Family::z33, 1, 2)},
      {"z34", "f1f2=e1, f2f1=-e1", "(n,m) = (1,2)", spec(Family::z34, 1, 2)},
      {"z35", "f1e1=f2, f1f1=e1", "(n,m) = (1,2)", spec(Family::z35, 1, 2)},
      {"z36", "f1e1=f2", "(n,m) = (1,2)", spec(Family::z36, 1, 2)},
      {"z37", "e1f1=alpha f2, f1e1=f2", "(n,m) = (1,2)",
       spec(Family::z37, 1, 2, {{"alpha", one}})},
      {"z38", "e1f1=f2", "(n,m) = (1,2)", spec(Family::z38, 1, 2)},
      {"z39", "e1e1=e2, f1f1=e2", "(n,m) = (2,1)", spec(Family::z39, 2, 1)},
  };
}

}  // namespace zinbiel

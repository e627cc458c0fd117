#include "zinbiel/polysys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "zinbiel/rng.hpp"

namespace zinbiel {

std::string Var::str() const {
  char k = kind == VarKind::a ? 'a' : kind == VarKind::b ? 'b' : 'c';
  if (i <= 9 && j <= 9) return std::string(1, k) + std::to_string(i) + std::to_string(j);
  return std::string(1, k) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto it = factors.begin();
  auto jt = o.factors.begin();
  while (it != factors.end() || jt != o.factors.end()) {
    if (jt == o.factors.end() || (it != factors.end() && it->first < jt->first)) {
      out.factors.push_back(*it++);
    } else if (it == factors.end() || jt->first < it->first) {
      out.factors.push_back(*jt++);
    } else {
      out.factors.emplace_back(it->first, it->second + jt->second);
      ++it;
      ++jt;
    }
  }
  return out;
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors) {
    if (!out.empty()) out += "*";
    out += v.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto flatten = [](const Monomial& m) {
    std::vector<Var> seq;
    for (const auto& [v, e] : m.factors)
      for (unsigned k = 0; k < e; ++k) seq.push_back(v);
    return seq;
  };
  return flatten(a) < flatten(b);
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (!c.is_zero()) p.terms_[Monomial::one()] = std::move(c);
  return p;
}

Poly Poly::var(Var v) {
  Poly p;
  p.terms_[Monomial::var(v)] = Rational(1);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [mono, c] : o.terms_) {
    if (c.is_zero()) continue;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      auto [it, inserted] = out.terms_.try_emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& c) const {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_[mono] = c * coeff;
  return out;
}

Poly Poly::monic() const {
  if (terms_.empty()) return {};
  const Rational& lead = terms_.rbegin()->second;
  return scaled(Rational(1) / lead);
}

Rational Poly::eval(const std::map<Var, Rational>& assignment) const {
  Rational out(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational term = coeff;
    for (const auto& [v, e] : mono.factors) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("eval: no value assigned to " + v.str());
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (out.empty()) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    bool is_const = it->first.factors.empty();
    if (!(c == Rational(1)) || is_const) {
      out += c.str();
      if (!is_const) out += "*";
    }
    if (!is_const) out += it->first.str();
  }
  return out;
}

bool operator<(const Poly& a, const Poly& b) {
  // Compare from the leading term down.
  auto it = a.terms_.rbegin();
  auto jt = b.terms_.rbegin();
  for (; it != a.terms_.rend() && jt != b.terms_.rend(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return it == a.terms_.rend() && jt != b.terms_.rend();
}

Poly Poly::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&] { throw std::invalid_argument("malformed polynomial: \"" + text + "\""); };
  auto read_uint = [&]() -> unsigned {
    std::size_t start = pos;
    unsigned v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + static_cast<unsigned>(text[pos++] - '0');
    if (pos == start) fail();
    return v;
  };
  Poly out;
  skip_ws();
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      fail();
    }
    Rational coeff(1);
    Monomial mono;
    bool saw_factor = false;
    for (;;) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          num.push_back(text[pos++]);
        if (pos < text.size() && text[pos] == '/') {
          num.push_back(text[pos++]);
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            num.push_back(text[pos++]);
        }
        coeff *= Rational::parse(num);
        saw_factor = true;
      } else if (pos < text.size() &&
                 (text[pos] == 'a' || text[pos] == 'b' || text[pos] == 'c')) {
        VarKind kind = text[pos] == 'a' ? VarKind::a : text[pos] == 'b' ? VarKind::b : VarKind::c;
        ++pos;
        unsigned vi = 0, vj = 0;
        if (pos < text.size() && text[pos] == '(') {
          ++pos;
          vi = read_uint();
          skip_ws();
          if (pos >= text.size() || text[pos] != ',') fail();
          ++pos;
          skip_ws();
          vj = read_uint();
          if (pos >= text.size() || text[pos] != ')') fail();
          ++pos;
        } else {
          if (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
              !std::isdigit(static_cast<unsigned char>(text[pos + 1])))
            fail();
          vi = static_cast<unsigned>(text[pos++] - '0');
          vj = static_cast<unsigned>(text[pos++] - '0');
        }
        unsigned exp = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exp = read_uint();
        }
        Monomial f;
        f.factors = {{Var{kind, vi, vj}, exp}};
        mono = mono * f;
        saw_factor = true;
      } else {
        fail();
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_factor) fail();
    if (!coeff.is_zero()) {
      Poly term;
      term.terms_[mono] = negative ? -coeff : coeff;
      out += term;
    }
    first = false;
    skip_ws();
  }
  if (first) fail();
  return out;
}

namespace {

using PolyVec = std::vector<Poly>;  // slot 0 = e1, slot k = f_k

PolyVec generic_product(std::size_t n1, std::size_t u, std::size_t v) {
  PolyVec out(n1 + 1);
  if (u == 0 && v == 0) return out;  // e1 e1 = 0 in this ansatz
  if (u == 0) {
    for (std::size_t j = 1; j <= n1; ++j)
      out[j] = Poly::var({VarKind::a, static_cast<unsigned>(v), static_cast<unsigned>(j)});
    return out;
  }
  if (v == 0) {
    for (std::size_t j = 1; j <= n1; ++j)
      out[j] = Poly::var({VarKind::b, static_cast<unsigned>(u), static_cast<unsigned>(j)});
    return out;
  }
  out[0] = Poly::var({VarKind::c, static_cast<unsigned>(u), static_cast<unsigned>(v)});
  return out;
}

PolyVec vec_mul(std::size_t n1, const PolyVec& x, const PolyVec& y) {
  PolyVec out(n1 + 1);
  for (std::size_t u = 0; u <= n1; ++u) {
    if (x[u].is_zero()) continue;
    for (std::size_t v = 0; v <= n1; ++v) {
      if (y[v].is_zero()) continue;
      PolyVec p = generic_product(n1, u, v);
      Poly factor = x[u] * y[v];
      for (std::size_t k = 0; k <= n1; ++k)
        if (!p[k].is_zero()) out[k] += factor * p[k];
    }
  }
  return out;
}

PolyVec unit_vec(std::size_t n1, std::size_t slot) {
  PolyVec out(n1 + 1);
  out[slot] = Poly::constant(Rational(1));
  return out;
}

BasisLabel slot_label(std::size_t slot) {
  return slot == 0 ? e_label(1) : f_label(slot);
}

}  // namespace

GenericSystem generic_superidentity_system(std::size_t n0, std::size_t n1, SignConvention sign) {
  if (n0 != 1)
    throw std::invalid_argument("generic system supports the (1, n1) pattern only");
  GenericSystem sys;
  sys.n1 = n1;
  std::set<Poly> canon;
  for (std::size_t x = 0; x <= n1; ++x)
    for (std::size_t y = 0; y <= n1; ++y)
      for (std::size_t z = 0; z <= n1; ++z) {
        bool odd_pair = sign == SignConvention::second_third ? (y > 0 && z > 0) : (x > 0 && y > 0);
        PolyVec xy = generic_product(n1, x, y);
        PolyVec t1 = vec_mul(n1, xy, unit_vec(n1, z));
        PolyVec yz = generic_product(n1, y, z);
        PolyVec zy = generic_product(n1, z, y);
        PolyVec inner(n1 + 1);
        for (std::size_t k = 0; k <= n1; ++k)
          inner[k] = odd_pair ? yz[k] - zy[k] : yz[k] + zy[k];
        PolyVec t2 = vec_mul(n1, unit_vec(n1, x), inner);
        for (std::size_t k = 0; k <= n1; ++k) {
          Poly r = t1[k] - t2[k];
          if (r.is_zero()) continue;
          sys.residuals.push_back({slot_label(x), slot_label(y), slot_label(z), slot_label(k), r});
          canon.insert(r.monic());
        }
      }
  sys.polynomials.assign(canon.begin(), canon.end());
  return sys;
}

Assignment zero_assignment(std::size_t n1) {
  Assignment out;
  for (unsigned i = 1; i <= n1; ++i)
    for (unsigned j = 1; j <= n1; ++j) {
      out[{VarKind::a, i, j}] = Rational(0);
      out[{VarKind::b, i, j}] = Rational(0);
      out[{VarKind::c, i, j}] = Rational(0);
    }
  return out;
}

SuperAlgebra algebra_from_assignment(std::size_t n1, const Assignment& assignment) {
  SuperAlgebra alg(1, n1);
  auto value = [&](VarKind k, unsigned i, unsigned j) {
    auto it = assignment.find({k, i, j});
    return it == assignment.end() ? Rational(0) : it->second;
  };
  for (unsigned i = 1; i <= n1; ++i) {
    SuperElement ef(1, n1), fe(1, n1);
    for (unsigned j = 1; j <= n1; ++j) {
      ef += value(VarKind::a, i, j) * SuperElement::basis(1, n1, f_label(j));
      fe += value(VarKind::b, i, j) * SuperElement::basis(1, n1, f_label(j));
    }
    if (!ef.is_zero()) alg.set_product(e_label(1), f_label(i), ef);
    if (!fe.is_zero()) alg.set_product(f_label(i), e_label(1), fe);
    for (unsigned j = 1; j <= n1; ++j) {
      Rational c = value(VarKind::c, i, j);
      if (!c.is_zero())
        alg.set_product(f_label(i), f_label(j), c * SuperElement::basis(1, n1, e_label(1)));
    }
  }
  return alg;
}

SolutionFamily solution_family_from_name(const std::string& name) {
  if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'h')
    return static_cast<SolutionFamily>(name[0] - 'a');
  throw std::invalid_argument("unknown solution family: \"" + name + "\"");
}

std::string solution_family_name(SolutionFamily f) {
  return std::string(1, static_cast<char>('a' + static_cast<int>(f)));
}

Assignment family_assignment(SolutionFamily fam, const FamilyParams& params) {
  auto get = [&](const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument("family (" + solution_family_name(fam) +
                                  ") requires parameter " + name);
    return it->second;
  };
  auto get_nonzero = [&](const std::string& name) {
    Rational v = get(name);
    if (v.is_zero())
      throw std::invalid_argument("family (" + solution_family_name(fam) + ") requires " + name +
                                  " != 0");
    return v;
  };
  Assignment out = zero_assignment(2);
  auto set = [&](VarKind k, unsigned i, unsigned j, Rational v) { out[{k, i, j}] = std::move(v); };
  switch (fam) {
    case SolutionFamily::a: {
      set(VarKind::c, 1, 1, get("l11"));
      set(VarKind::c, 1, 2, get("l12"));
      set(VarKind::c, 2, 1, get("l21"));
      set(VarKind::c, 2, 2, get("l22"));
      break;
    }
    case SolutionFamily::b: {
      Rational l11 = get_nonzero("l11"), l12 = get_nonzero("l12"), mu = get("mu");
      set(VarKind::b, 1, 1, mu);
      set(VarKind::b, 1, 2, -(l11 / l12) * mu);
      set(VarKind::b, 2, 1, (l12 / l11) * mu);
      set(VarKind::b, 2, 2, -mu);
      set(VarKind::c, 1, 1, l11);
      set(VarKind::c, 1, 2, l12);
      set(VarKind::c, 2, 1, l12);
      set(VarKind::c, 2, 2, l12 * l12 / l11);
      break;
    }
    case SolutionFamily::c: {
      Rational mu = get("mu"), mup = get_nonzero("mup");
      set(VarKind::a, 1, 1, mu);
      set(VarKind::a, 1, 2, -(mu * mu) / mup);
      set(VarKind::a, 2, 1, mup);
      set(VarKind::a, 2, 2, -mu);
      break;
    }
    case SolutionFamily::d: {
      Rational mu = get("mu"), nu = get_nonzero("nu"), nup = get_nonzero("nup");
      set(VarKind::a, 1, 1, mu);
      set(VarKind::a, 1, 2, -(mu * nu) / nup);
      set(VarKind::a, 2, 1, (mu * nup) / nu);
      set(VarKind::a, 2, 2, -mu);
      set(VarKind::b, 1, 1, nu);
      set(VarKind::b, 1, 2, -(nu * nu) / nup);
      set(VarKind::b, 2, 1, nup);
      set(VarKind::b, 2, 2, -nu);
      break;
    }
    case SolutionFamily::e:
      set(VarKind::b, 1, 2, get("mu"));
      set(VarKind::c, 1, 1, get("mup"));
      break;
    case SolutionFamily::f:
      set(VarKind::b, 2, 1, get("mu"));
      set(VarKind::c, 2, 2, get("mup"));
      break;
    case SolutionFamily::g:
      set(VarKind::a, 1, 2, get("mu"));
      set(VarKind::b, 1, 2, get("mup"));
      break;
    case SolutionFamily::h:
      set(VarKind::a, 2, 1, get("mu"));
      set(VarKind::b, 2, 1, get("mup"));
      break;
  }
  return out;
}

std::vector<FamilyParams> seeded_family_samples(SolutionFamily fam, std::size_t count,
                                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<FamilyParams> out;
  auto free_param = [&] { return random_rational(rng); };
  auto nonzero_param = [&] { return random_nonzero_rational(rng); };
  for (std::size_t k = 0; k < count; ++k) {
    FamilyParams p;
    switch (fam) {
      case SolutionFamily::a:
        p = {{"l11", free_param()}, {"l12", free_param()}, {"l21", free_param()},
             {"l22", free_param()}};
        break;
      case SolutionFamily::b:
        p = {{"l11", nonzero_param()}, {"l12", nonzero_param()}, {"mu", free_param()}};
        break;
      case SolutionFamily::c:
        p = {{"mu", free_param()}, {"mup", nonzero_param()}};
        break;
      case SolutionFamily::d:
        p = {{"mu", free_param()}, {"nu", nonzero_param()}, {"nup", nonzero_param()}};
        break;
      default:
        p = {{"mu", free_param()}, {"mup", free_param()}};
        break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

FamilyVerification verify_family(SolutionFamily fam, const std::vector<FamilyParams>& samples) {
  GenericSystem sys = generic_superidentity_system(1, 2);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    Assignment assign = family_assignment(fam, samples[s]);
    for (const auto& poly : sys.polynomials)
      if (!poly.eval(assign).is_zero()) return {false, s, poly};
  }
  return {true, 0, {}};
}

MatchReport system_matches_paper(const std::vector<Poly>& generated,
                                 const std::vector<Poly>& transcribed) {
  std::set<Poly> canon;
  for (const auto& p : generated) canon.insert(p.monic());
  MatchReport report;
  std::set<Poly> covered;
  report.all_matched = true;
  for (const auto& t : transcribed) {
    bool matched = canon.count(t.monic()) > 0;
    if (matched) covered.insert(t.monic());
    report.rows.push_back({t, matched});
    report.all_matched = report.all_matched && matched;
  }
  for (const auto& p : canon)
    if (!covered.count(p)) report.uncovered.push_back(p);
  return report;
}

}  // namespace zinbiel

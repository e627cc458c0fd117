#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zinbiel/rational.hpp"
#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// Structure-constant variable for the one-even-generator pattern (1, n1):
///   a(i,j): coefficient of f_j in e1 f_i
///   b(i,j): coefficient of f_j in f_i e1
///   c(i,j): coefficient of e1 in f_i f_j
enum class VarKind { a, b, c };

struct Var {
  VarKind kind;
  unsigned i;
  unsigned j;

  auto operator<=>(const Var&) const = default;
  std::string str() const;
};

/// Monomial as a sorted factor list with positive exponents. Ordered by
/// total degree, then lexicographically on the flattened factor sequence.
struct Monomial {
  std::vector<std::pair<Var, unsigned>> factors;

  static Monomial one() { return {}; }
  static Monomial var(Var v) { return {{{v, 1}}}; }
  unsigned degree() const;
  Monomial operator*(const Monomial& o) const;
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);
};

/// Sparse multivariate polynomial over Q; no zero coefficients stored.
class Poly {
public:
  Poly() = default;
  static Poly constant(Rational c);
  static Poly var(Var v);
  /// Parses "a11^2 + 2*a11*b12 - 1/2*c21"; also accepts "a(1,1)" factors.
  static Poly parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;

  /// Leading coefficient made 1 (scalar-normal form); zero stays zero.
  Poly monic() const;

  /// Substitutes and folds; throws std::invalid_argument when a variable of
  /// this polynomial is missing from the assignment.
  Rational eval(const std::map<Var, Rational>& assignment) const;

  std::string str() const;

  friend bool operator==(const Poly&, const Poly&) = default;
  friend bool operator<(const Poly& a, const Poly& b);

private:
  std::map<Monomial, Rational> terms_;
};

/// Which parities feed the sign (-1)^{..} in the residual
/// sZ{x,y,z} = (xy)z - x(yz + sign * zy): the parities of y,z (the algebra's
/// convention) or of x,y (for the empirical comparison of the two readings).
enum class SignConvention { second_third, first_second };

struct TripleResidual {
  BasisLabel x, y, z;
  BasisLabel coordinate;
  Poly poly;
};

struct GenericSystem {
  std::size_t n1 = 0;
  std::vector<TripleResidual> residuals;  // every nonzero coordinate, triple order
  std::vector<Poly> polynomials;          // monic, deduplicated, canonical order
};

/// Symbolic residual system for the pattern (n0, n1); only n0 = 1 is
/// representable with these variables (throws std::invalid_argument
/// otherwise). e1 e1 = 0 in the ansatz.
GenericSystem generic_superidentity_system(std::size_t n0, std::size_t n1,
                                           SignConvention sign = SignConvention::second_third);

using Assignment = std::map<Var, Rational>;

/// All variables of the (1, n1) pattern set to zero.
Assignment zero_assignment(std::size_t n1);

/// Concrete (1, n1) algebra with the assigned structure constants.
SuperAlgebra algebra_from_assignment(std::size_t n1, const Assignment& assignment);

/// The eight (1,2) solution families. Parameters by name:
///   a: l11, l12, l21, l22      b: l11 != 0, l12 != 0, mu
///   c: mu, mup != 0            d: mu, nu != 0, nup != 0
///   e,f,g,h: mu, mup
enum class SolutionFamily { a, b, c, d, e, f, g, h };

SolutionFamily solution_family_from_name(const std::string& name);
std::string solution_family_name(SolutionFamily f);

using FamilyParams = std::map<std::string, Rational>;

/// Throws std::invalid_argument when a parameter is missing or a divided
/// parameter is zero.
Assignment family_assignment(SolutionFamily fam, const FamilyParams& params);

/// Deterministic parameter samples respecting the family's nonvanishing
/// constraints.
std::vector<FamilyParams> seeded_family_samples(SolutionFamily fam, std::size_t count,
                                                std::uint64_t seed);

struct FamilyVerification {
  bool ok;
  std::size_t failing_sample = 0;
  Poly failing_poly;
};

/// Substitutes each sample into the full generic (1,2) system.
FamilyVerification verify_family(SolutionFamily fam, const std::vector<FamilyParams>& samples);

struct MatchReport {
  struct Row {
    Poly transcribed;
    bool matched;
  };
  std::vector<Row> rows;
  std::vector<Poly> uncovered;  // generated polynomials with no counterpart
  bool all_matched = false;
};

/// Matches each transcribed polynomial against the generated list up to a
/// nonzero scalar, and reports generated polynomials left uncovered.
MatchReport system_matches_paper(const std::vector<Poly>& generated,
                                 const std::vector<Poly>& transcribed);

}  // namespace zinbiel

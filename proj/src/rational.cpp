#include "zinbiel/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace zinbiel {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto fail = [&] { throw std::invalid_argument("malformed rational: \"" + text + "\""); };
  std::size_t pos = 0;
  auto read_int = [&](bool allow_sign) -> std::string {
    std::string out;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      if (text[pos] == '-') out.push_back('-');
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
    }
    if (pos == start) fail();
    return out;
  };
  std::string num = read_int(true);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int(false);
  }
  if (pos != text.size()) fail();
  mpz_class d(den);
  if (d == 0) fail();
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -r.v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(mpq_class(z));
}

Rational factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(mpq_class(z));
}

}  // namespace zinbiel

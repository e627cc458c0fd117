#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace zinbiel {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Always kept canonical: lowest terms, positive denominator, zero is 0/1.
/// Serializes as "p/q", or just "p" when the denominator is 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): 2 reads as 2/1
  Rational(long num, long den);

  /// Parses "p" or "p/q" with optional leading sign. Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational parse(const std::string& text);

  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);
  friend Rational binomial(unsigned long n, unsigned long k);
  friend Rational factorial(unsigned long n);

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Exact binomial coefficient, 0 when k > n.
Rational binomial(unsigned long n, unsigned long k);

/// Exact factorial.
Rational factorial(unsigned long n);

}  // namespace zinbiel

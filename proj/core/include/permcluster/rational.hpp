#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "permcluster/errors.hpp"

namespace permcluster {

using Integer = mpz_class;

/// Arbitrary-precision signed rational, always in lowest terms with a
/// positive denominator. Division by zero throws DivisionByZero instead of
/// trapping inside GMP.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}               // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : q_(v) {}     // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
  /// input and DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_raw(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return from_raw(::abs(q_)); }
  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(unsigned e) const;

  /// Canonical "p/q" form, "p" when q = 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  /// Natural log of a positive value without overflowing double range.
  double log() const;

  static Rational from_raw(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

 private:
  mpq_class q_;
};

/// ln of a positive big integer, accurate to double precision.
double log_integer(const Integer& v);

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& r, int significant = 6);

}  // namespace permcluster

#pragma once

#include <string>

#include "permcluster/poly.hpp"

namespace permcluster {

/// Rational function num(n)/den(n). Every stored value is reduced by the
/// polynomial gcd and has a monic denominator, so the representation is
/// canonical; equality is still defined by cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is the zero polynomial.
  RatFunc(Poly num, Poly den);

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// deg(num) − deg(den); meaningless for the zero function.
  int degree_difference() const { return num_.degree() - den_.degree(); }

  /// Throws DivisionByZero at a pole.
  Rational operator()(const Rational& x) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Rational& s);
  RatFunc& operator/=(const Rational& s);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Rational& s) { return a *= s; }
  friend RatFunc operator*(const Rational& s, RatFunc a) { return a *= s; }
  friend RatFunc operator/(RatFunc a, const Rational& s) { return a /= s; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Outcome of lim_{n→∞} f(n) / n^shift.
struct Limit {
  enum class Kind { Finite, Zero, Diverges };
  Kind kind = Kind::Zero;
  Rational value;  // the limit when Finite, zero otherwise

  bool finite() const { return kind == Kind::Finite; }
  /// The limit as a number; Zero maps to 0. Throws std::domain_error on Diverges.
  Rational as_rational() const;
  friend bool operator==(const Limit&, const Limit&) = default;
};

std::string to_string(Limit::Kind kind);

/// lim_{n→∞} f(n)/n^shift decided from degrees and leading coefficients.
Limit limit_over_n(const RatFunc& f, int shift);

}  // namespace permcluster

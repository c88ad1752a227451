#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "permcluster/rational.hpp"

namespace permcluster {

/// Dense univariate polynomial in the symbol n with exact rational
/// coefficients. coeffs()[k] multiplies n^k; trailing zeros are trimmed, so
/// the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  /// The polynomial n.
  static Poly variable();
  /// a·n + b.
  static Poly linear(const Rational& a, const Rational& b);
  /// (a·n + b)(a·n + b − 1)⋯(a·n + b − (count − 1)).
  static Poly falling_factorial(const Rational& a, const Rational& b, int count);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  /// Number of zero coefficients below the lowest nonzero one (the power of n dividing this).
  int low_order() const;

  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(unsigned e) const;
  /// Multiplies by n^k.
  Poly shifted(int k) const;
  /// Divides by n^k; the low k coefficients must be zero.
  Poly unshifted(int k) const;
  Poly monic() const;

  /// Euclidean division over the rationals. Throws DivisionByZero for b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// a / b when b divides a; throws std::logic_error otherwise.
  static Poly exact_div(const Poly& a, const Poly& b);
  /// Monic greatest common divisor (zero when both inputs are zero).
  static Poly gcd(const Poly& a, const Poly& b);

  /// Human-readable form, e.g. "1/2*n^2 - n + 3".
  std::string str(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace permcluster

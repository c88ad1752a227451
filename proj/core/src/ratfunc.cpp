#include "permcluster/ratfunc.hpp"

#include <stdexcept>

namespace permcluster {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::exact_div(num_, g);
      den_ = Poly::exact_div(den_, g);
    }
  }
  const Rational lead = den_.lead();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
  return num_(x) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

// Sums and products follow Henrici: only the gcds that can be nontrivial are
// computed, given that both operands are already reduced.
RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ + o.num_;  // both denominators are 1 after normalization
    return *this;
  }
  const Poly g = Poly::gcd(den_, o.den_);
  const Poly b1 = Poly::exact_div(den_, g);
  const Poly d1 = Poly::exact_div(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatFunc();
  Poly d = b1 * o.den_;
  if (!g.is_constant()) {
    const Poly h = Poly::gcd(n, g);
    if (!h.is_constant()) {
      n = Poly::exact_div(n, h);
      d = Poly::exact_div(d, h);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  const Rational lead = den_.lead();
  if (!lead.is_one()) {
    num_ *= lead.inverse();
    den_ *= lead.inverse();
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    const Poly g = Poly::gcd(a, d);
    if (!g.is_constant()) {
      a = Poly::exact_div(a, g);
      d = Poly::exact_div(d, g);
    }
  }
  if (!b.is_constant()) {
    const Poly g = Poly::gcd(c, b);
    if (!g.is_constant()) {
      c = Poly::exact_div(c, g);
      b = Poly::exact_div(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  const Rational lead = den_.lead();
  if (!lead.is_one()) {
    num_ *= lead.inverse();
    den_ *= lead.inverse();
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  RatFunc inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  const Rational lead = inv.den_.lead();
  inv.num_ *= lead.inverse();
  inv.den_ *= lead.inverse();
  return *this *= inv;
}

RatFunc& RatFunc::operator*=(const Rational& s) {
  if (s.is_zero()) return *this = RatFunc();
  num_ *= s;
  return *this;
}

RatFunc& RatFunc::operator/=(const Rational& s) {
  if (s.is_zero()) throw DivisionByZero();
  num_ *= s.inverse();
  return *this;
}

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rational Limit::as_rational() const {
  if (kind == Kind::Diverges) throw std::domain_error("limit diverges");
  return value;
}

std::string to_string(Limit::Kind kind) {
  switch (kind) {
    case Limit::Kind::Finite: return "finite";
    case Limit::Kind::Zero: return "zero";
    case Limit::Kind::Diverges: return "diverges";
  }
  return "unknown";
}

Limit limit_over_n(const RatFunc& f, int shift) {
  if (f.is_zero()) return {Limit::Kind::Zero, Rational(0)};
  const int d = f.degree_difference();
  if (d < shift) return {Limit::Kind::Zero, Rational(0)};
  if (d > shift) return {Limit::Kind::Diverges, Rational(0)};
  return {Limit::Kind::Finite, f.num().lead() / f.den().lead()};
}

}  // namespace permcluster

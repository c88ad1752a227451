#include "permcluster/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permcluster {
namespace {

// Poly = scale · ints, with ints primitive (content 1, positive lead).
struct IntegerForm {
  std::vector<Integer> ints;
  Rational scale;
};

IntegerForm to_integer_form(const std::vector<Rational>& c) {
  IntegerForm out;
  if (c.empty()) return out;
  Integer lcm = 1;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.raw().get_den_mpz_t());
  out.ints.resize(c.size());
  Integer content = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Integer v = lcm / c[k].raw().get_den();
    out.ints[k] = c[k].raw().get_num() * v;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.ints[k].get_mpz_t());
  }
  if (out.ints.back() < 0) content = -content;
  for (auto& v : out.ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  out.scale = Rational(content, lcm);
  return out;
}

void make_primitive(std::vector<Integer>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& v : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0), integer coefficients.
std::vector<Integer> pseudo_remainder(std::vector<Integer> r, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  Integer t;
  while (!r.empty() && r.size() - 1 >= db) {
    t = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& v : r) v *= lb;
    for (std::size_t k = 0; k < db; ++k) mpz_submul(r[k + shift].get_mpz_t(), t.get_mpz_t(), b[k].get_mpz_t());
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::linear(const Rational& a, const Rational& b) { return Poly(std::vector<Rational>{b, a}); }

Poly Poly::falling_factorial(const Rational& a, const Rational& b, int count) {
  Poly out(1);
  for (int j = 0; j < count; ++j) out *= linear(a, b - Rational(j));
  return out;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

int Poly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k].is_zero()) ++k;
  return k;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b * a.c_[0];
  if (b.is_constant()) return a * b.c_[0];
  // Multiply primitive integer parts; avoids a gcd per coefficient product.
  const IntegerForm fa = to_integer_form(a.c_);
  const IntegerForm fb = to_integer_form(b.c_);
  std::vector<Integer> prod(fa.ints.size() + fb.ints.size() - 1);
  for (std::size_t i = 0; i < fa.ints.size(); ++i) {
    if (fa.ints[i] == 0) continue;
    for (std::size_t j = 0; j < fb.ints.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), fa.ints[i].get_mpz_t(), fb.ints[j].get_mpz_t());
  }
  const Rational scale = fa.scale * fb.scale;
  std::vector<Rational> out;
  out.reserve(prod.size());
  for (auto& v : prod) out.push_back(scale * Rational(v));
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly out;
  out.c_.assign(static_cast<std::size_t>(k), Rational(0));
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

Poly Poly::unshifted(int k) const {
  if (k > low_order() && !is_zero()) throw std::logic_error("Poly::unshifted: not divisible by n^k");
  if (is_zero() || k == 0) return *this;
  return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lead = b.lead().inverse();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational t = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= t * b.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  if (b.is_constant()) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    return a * b.c_[0].inverse();
  }
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("Poly::exact_div: nonzero remainder");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  // Common powers of n are split off first; they are frequent here and cheap.
  const int low = std::min(a.low_order(), b.low_order());
  std::vector<Integer> p = to_integer_form(a.unshifted(low).c_).ints;
  std::vector<Integer> q = to_integer_form(b.unshifted(low).c_).ints;
  if (p.size() < q.size()) std::swap(p, q);
  while (!q.empty()) {
    if (q.size() == 1) {
      p = {Integer(1)};
      break;
    }
    std::vector<Integer> r = pseudo_remainder(std::move(p), q);
    make_primitive(r);
    p = std::move(q);
    q = std::move(r);
  }
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& v : p) out.emplace_back(v);
  return Poly(std::move(out)).monic().shifted(low);
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag.is_one() && k > 0;
    if (!unit) os << mag.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace permcluster

#include "permcluster/laurent.hpp"

#include <sstream>

namespace permcluster {

LaurentR::LaurentR(const std::map<int, Rational>& terms) {
  for (const auto& [k, a] : terms) set(k, a);
}

void LaurentR::set(int k, const Rational& a) {
  if (a.is_zero())
    terms_.erase(k);
  else
    terms_[k] = a;
}

Rational LaurentR::coeff(int k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<int, int> LaurentR::support() const {
  if (terms_.empty()) return {0, -1};
  return {terms_.begin()->first, terms_.rbegin()->first};
}

Rational LaurentR::operator()(const Rational& r) const {
  if (r.is_zero()) throw DivisionByZero("Laurent polynomial in 1/r evaluated at r = 0");
  const Rational inv = r.inverse();
  Rational acc;
  for (const auto& [k, a] : terms_) {
    acc += a * (k >= 0 ? inv.pow(static_cast<unsigned>(k)) : r.pow(static_cast<unsigned>(-k)));
  }
  return acc;
}

std::vector<std::pair<int, Rational>> LaurentR::pairs() const {
  return {terms_.begin(), terms_.end()};
}

std::string LaurentR::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : terms_) {
    const Rational mag = a.abs();
    if (first)
      os << (a.sign() < 0 ? "-" : "");
    else
      os << (a.sign() < 0 ? " - " : " + ");
    first = false;
    os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
    if (k == 1)
      os << "/r";
    else if (k != 0)
      os << "/r^" << k;
  }
  return os.str();
}

}  // namespace permcluster

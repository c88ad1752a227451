#include "permcluster/rational.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace permcluster {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto to_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: '" + s + "'");
    Integer v;
    if (v.set_str(part.front() == '+' ? part.substr(1) : part, 10) != 0)
      throw std::invalid_argument("malformed rational: '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return Rational(to_int(s));
  return Rational(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  mpq_class out(n, d);
  return from_raw(std::move(out));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double log_integer(const Integer& v) {
  if (v <= 0) throw std::domain_error("log of non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double Rational::log() const {
  if (sign() <= 0) throw std::domain_error("log of non-positive rational");
  return log_integer(q_.get_num()) - log_integer(q_.get_den());
}

std::string to_decimal(const Rational& r, int significant) {
  std::ostringstream os;
  os << std::setprecision(significant) << r.to_double();
  return os.str();
}

}  // namespace permcluster

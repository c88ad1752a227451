#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permcluster/rational.hpp"

namespace permcluster {

/// Finite Laurent polynomial Σ_k a_k r^(−k) in the inverse of r. Only
/// nonzero coefficients are stored.
class LaurentR {
 public:
  LaurentR() = default;
  explicit LaurentR(const std::map<int, Rational>& terms);

  void set(int k, const Rational& a);
  Rational coeff(int k) const;
  const std::map<int, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Smallest and largest stored power; {0, -1} when empty.
  std::pair<int, int> support() const;

  /// Exact value at r; throws DivisionByZero at r = 0.
  Rational operator()(const Rational& r) const;

  friend bool operator==(const LaurentR&, const LaurentR&) = default;

  /// Sorted (k, a_k) pairs.
  std::vector<std::pair<int, Rational>> pairs() const;
  /// e.g. "(1/2)/r - 7/r^4"
  std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

}  // namespace permcluster

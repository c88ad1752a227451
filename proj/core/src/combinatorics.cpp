#include "permcluster/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace permcluster {

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational falling_factorial(const Rational& x, long k) {
  Rational out(1);
  for (long j = 0; j < k; ++j) out *= x - Rational(j);
  return out;
}

namespace {

void partitions_rec(int remaining, int min_part, int cap, int parts_left, std::vector<int>& parts,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(cap, remaining); p >= min_part; --p) {
    // The rest must be coverable by at most parts_left − 1 parts of size ≤ p.
    if (static_cast<long>(p) * parts_left < remaining) break;
    parts.push_back(p);
    partitions_rec(remaining - p, min_part, p, parts_left - 1, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(int total, int min_part, int max_part, int max_parts,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (total < 0 || min_part < 1) throw std::invalid_argument("for_each_partition: bad bounds");
  std::vector<int> parts;
  partitions_rec(total, min_part, max_part, max_parts, parts, visit);
}

Integer multinomial(const std::vector<int>& multiplicities) {
  long total = 0;
  for (int m : multiplicities) total += m;
  Integer out = factorial(total);
  for (int m : multiplicities) out /= factorial(m);
  return out;
}

}  // namespace permcluster

#pragma once

#include <functional>
#include <vector>

#include "permcluster/rational.hpp"

namespace permcluster {

Integer factorial(long n);
/// Binomial coefficient; zero when k < 0 or k > n.
Integer binomial(long n, long k);
/// x(x−1)⋯(x−k+1) for an exact rational x (empty product = 1).
Rational falling_factorial(const Rational& x, long k);

/// Calls visit(parts) for every partition of total into nonincreasing parts,
/// each in [min_part, max_part], with at most max_parts parts.
void for_each_partition(int total, int min_part, int max_part, int max_parts,
                        const std::function<void(const std::vector<int>&)>& visit);

/// Number of distinct orderings of a multiset given by the multiplicities of its values.
Integer multinomial(const std::vector<int>& multiplicities);

}  // namespace permcluster

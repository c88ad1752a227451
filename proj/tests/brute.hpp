#pragma once

// Slow reference implementations used only as test oracles.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "permcluster/int_matrix.hpp"
#include "permcluster/rational.hpp"

namespace brute {

using permcluster::Integer;
using permcluster::IntMatrix;
using permcluster::Rational;

/// Permanent of the rows/cols selected, by expansion over permutations.
inline Integer permanent(const IntMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> p(cols.size());
  std::iota(p.begin(), p.end(), 0);
  Integer sum = 0;
  do {
    Integer prod = 1;
    for (std::size_t i = 0; i < rows.size() && prod != 0; ++i) prod *= static_cast<long>(a(rows[i], cols[p[i]]));
    sum += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

inline void for_each_subset(int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> s;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(s.size()) == m) {
      visit(s);
      return;
    }
    for (int x = start; x < n; ++x) {
      s.push_back(x);
      rec(x + 1);
      s.pop_back();
    }
  };
  rec(0);
}

/// Σ over all m×m submatrices of their permanents.
inline Integer perm_m(const IntMatrix& a, int m) {
  Integer total = 0;
  for_each_subset(a.n(), m, [&](const std::vector<int>& rows) {
    for_each_subset(a.n(), m, [&](const std::vector<int>& cols) { total += permanent(a, rows, cols); });
  });
  return total;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// All n×n 0-1 matrices with every row and column sum r.
inline std::vector<IntMatrix> all_regular(int n, int r) {
  std::vector<IntMatrix> out;
  std::vector<int> rowmasks;
  for (int mask = 0; mask < (1 << n); ++mask)
    if (__builtin_popcount(static_cast<unsigned>(mask)) == r) rowmasks.push_back(mask);
  std::vector<int> chosen(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int row) {
    if (row == n) {
      IntMatrix a(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (chosen[static_cast<std::size_t>(i)] >> j) & 1;
      if (a.has_margins(r)) out.push_back(a);
      return;
    }
    for (int m : rowmasks) {
      chosen[static_cast<std::size_t>(row)] = m;
      rec(row + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace brute

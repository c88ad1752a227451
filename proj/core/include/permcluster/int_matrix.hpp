#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permcluster/rational.hpp"

namespace permcluster {

/// Dense n×n matrix of nonnegative integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);
  static IntMatrix ones(int n);

  int n() const { return n_; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  std::vector<std::int64_t> row_sums() const;
  std::vector<std::int64_t> col_sums() const;
  /// True when every row and column sums to r.
  bool has_margins(std::int64_t r) const;
  std::int64_t total() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

inline constexpr int kPermSumMaxN = 16;

/// perm_m(A) for every m = 0..n in one subset-DP pass over the columns:
/// the state is the set of rows already matched, and perm_m is the sum of
/// the states with m rows. Throws GuardViolation for n > 16.
std::vector<Integer> perm_m_profile(const IntMatrix& a);

/// Σ over m-subsets of rows and columns of the permanent of the submatrix.
Integer perm_m_of(const IntMatrix& a, int m);

}  // namespace permcluster

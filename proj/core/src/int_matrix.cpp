#include "permcluster/int_matrix.hpp"

#include <bit>
#include <type_traits>
#include <sstream>
#include <stdexcept>

namespace permcluster {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("IntMatrix must be square");
    int j = 0;
    for (auto v : row) {
      if (v < 0) throw std::invalid_argument("IntMatrix entries must be nonnegative");
      (*this)(i, j++) = v;
    }
    ++i;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(int n) {
  IntMatrix m(n);
  for (auto& v : m.a_) v = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::row_sums() const {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s[static_cast<std::size_t>(i)] += (*this)(i, j);
  return s;
}

std::vector<std::int64_t> IntMatrix::col_sums() const {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s[static_cast<std::size_t>(j)] += (*this)(i, j);
  return s;
}

bool IntMatrix::has_margins(std::int64_t r) const {
  for (auto v : row_sums())
    if (v != r) return false;
  for (auto v : col_sums())
    if (v != r) return false;
  return true;
}

std::int64_t IntMatrix::total() const {
  std::int64_t t = 0;
  for (auto v : a_) t += v;
  return t;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

namespace {

template <class T>
std::vector<Integer> profile_dp(const IntMatrix& a, bool* overflow) {
  const int n = a.n();
  const std::size_t states = std::size_t{1} << n;
  std::vector<T> dp(states, T(0)), next;
  dp[0] = T(1);
  for (int col = 0; col < n; ++col) {
    next = dp;
    for (std::size_t mask = 0; mask < states; ++mask) {
      if (dp[mask] == T(0)) continue;
      for (int row = 0; row < n; ++row) {
        const std::size_t bit = std::size_t{1} << row;
        const std::int64_t w = a(row, col);
        if ((mask & bit) || w == 0) continue;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(dp[mask], w, &prod) ||
              __builtin_add_overflow(next[mask | bit], prod, &next[mask | bit])) {
            *overflow = true;
            return {};
          }
        } else {
          next[mask | bit] += dp[mask] * Integer(static_cast<long>(w));
        }
      }
    }
    dp.swap(next);
  }
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1, Integer(0));
  for (std::size_t mask = 0; mask < states; ++mask) {
    if constexpr (std::is_same_v<T, std::int64_t>)
      out[static_cast<std::size_t>(std::popcount(mask))] += Integer(static_cast<long>(dp[mask]));
    else
      out[static_cast<std::size_t>(std::popcount(mask))] += dp[mask];
  }
  return out;
}

}  // namespace

std::vector<Integer> perm_m_profile(const IntMatrix& a) {
  if (a.n() > kPermSumMaxN) throw GuardViolation("perm_m_of: n exceeds 16");
  bool overflow = false;
  auto fast = profile_dp<std::int64_t>(a, &overflow);
  if (!overflow) return fast;
  return profile_dp<Integer>(a, nullptr);
}

Integer perm_m_of(const IntMatrix& a, int m) {
  if (m < 0 || m > a.n()) throw IndexOutOfRange("perm_m_of: m outside 0..n");
  return perm_m_profile(a)[static_cast<std::size_t>(m)];
}

}  // namespace permcluster

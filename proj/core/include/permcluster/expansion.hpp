#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permcluster/ensembles.hpp"
#include "permcluster/ratfunc.hpp"
#include "permcluster/rational.hpp"

namespace permcluster {

/// Which sum the expansion describes: perm(A) itself, or perm_m(A) with m = αn.
enum class ExpansionMode { Permanent, PermanentalSum };
std::string to_string(ExpansionMode mode);

/// Expectations E(perm_j) and E_B(perm_j) for j = 0..order, over the field F
/// (Rational at a fixed n, RatFunc when symbolic in n). Values are computed
/// once at construction and reused by every C_i.
template <class F>
struct ExpectationProvider {
  EnsembleKind kind;
  Rational r;
  F n;                       // the matrix size as an element of F
  std::optional<int> fixed_n;
  std::vector<F> moments;    // E(perm_j)
  std::vector<F> bernoulli;  // E_B(perm_j)

  int order() const { return static_cast<int>(moments.size()) - 1; }
  /// Throws IndexOutOfRange past the supported order.
  const F& moment(int j) const;
};

using FixedProvider = ExpectationProvider<Rational>;
using SymbolicProvider = ExpectationProvider<RatFunc>;

/// Moments at a fixed n up to `order` (≤ n). For TwoRegularExact r must be 2;
/// ExactUniform enumerates (n ≤ 6).
FixedProvider fixed_provider(EnsembleKind kind, int n, const Rational& r, int order);
/// Fixed-n moments of the r = 2 uniform ensemble read from a prebuilt table.
FixedProvider fixed_provider(const TwoRegularTable& table, int n, int order);
/// Moments as rational functions of n. ExactUniform uses the three known
/// closed forms and so supports order ≤ 3.
SymbolicProvider symbolic_provider(EnsembleKind kind, const Rational& r, int order);

/// f(i,k) = C(n,i)² C(i,k)² / (C(n,k)² C(n,i−k)²); requires 0 ≤ k ≤ i ≤ n.
Rational f_coeff(int n, int i, int k);
RatFunc f_coeff_symbolic(int i, int k);

/// C_i = (n^i (n−i)! / (r^i n!)) Σ_k f(i,k) E(perm_{i−k}) (−1)^k E_B(perm_k).
template <class F>
F c_term(int i, const ExpectationProvider<F>& provider);

/// Ĉ_i: C_i with the prefactor n^i m! ((n−i)!)² / (r^i (m−i)! (n!)²), m = αn,
/// and m!/(m−i)! taken as the falling factorial so αn need not be an integer.
template <class F>
F c_hat_term(int i, const Rational& alpha, const ExpectationProvider<F>& provider);

/// C_0..C_N and T_0..T_N, where T is the formal logarithm of 1 + Σ C_i.
template <class F>
struct ExpansionTable {
  EnsembleKind ensemble;
  Rational r;
  ExpansionMode mode = ExpansionMode::Permanent;
  std::optional<Rational> alpha;  // PermanentalSum only
  std::optional<int> fixed_n;     // empty when symbolic
  int order = 0;
  std::vector<F> C;  // C[0] = 1, C[1] = 0
  std::vector<F> T;  // T[0] = T[1] = 0

  bool symbolic() const { return !fixed_n.has_value(); }
};

using FixedTable = ExpansionTable<Rational>;
using SymbolicTable = ExpansionTable<RatFunc>;

/// Fills C via c_term / c_hat_term and T via series_log. C_0 = 1 and C_1 = 0
/// are checked after computing them (std::logic_error if either fails).
template <class F>
ExpansionTable<F> build_table(const ExpectationProvider<F>& provider, ExpansionMode mode, int order,
                              std::optional<Rational> alpha = std::nullopt);

/// E_B(perm_s)·(1 + Σ_{i≤s} C_i) against E(perm_s), where s = n for the
/// Permanent mode and s = αn for PermanentalSum (αn must be an integer).
/// Needs a fixed-n table built to order s.
bool reconstruction_holds(const FixedTable& table, const FixedProvider& provider);

/// a(s) == Σ_i C(s,i)² b(i) c(s−i) for size-indexed permanent expectations.
bool convolution_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c, int s);

struct ZeroOnGrid : std::domain_error {
  using std::domain_error::domain_error;
};

struct GrowthEstimate {
  std::vector<int> n_grid;
  std::vector<Rational> values;  // C_i(n) on the grid
  double slope = 0;              // least-squares slope of ln|C_i| against ln n
  Rational rounded;              // slope rounded to 1/100
};

/// Least-squares slope of ln|y| against ln x; throws ZeroOnGrid on a zero.
double log_log_slope(const std::vector<double>& x, const std::vector<Rational>& y);
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Growth exponent of C_i(n) over an increasing grid of ≥ 3 sizes.
GrowthEstimate growth_probe(EnsembleKind kind, const Rational& r, int i, const std::vector<int>& n_grid);

}  // namespace permcluster

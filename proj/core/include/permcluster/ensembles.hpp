#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permcluster/int_matrix.hpp"
#include "permcluster/ratfunc.hpp"
#include "permcluster/rational.hpp"

namespace permcluster {

/// The matrix ensembles whose expectations feed the expansion.
///  - Bernoulli: i.i.d. 0-1 entries with P(1) = r/n.
///  - PermSum (E1): sum of r independent uniform permutation matrices.
///  - Collapsed (E2): a uniform permutation of rn objects folded onto n×n by residue classes.
///  - ExactUniform (E): uniform over 0-1 matrices with all margins r, by enumeration.
///  - TwoRegularExact (E at r = 2): the same ensemble, computed from cycle structure.
enum class EnsembleKind { Bernoulli, PermSum, Collapsed, ExactUniform, TwoRegularExact };

/// Command-line tags: eb, e1, e2, e, e-r2.
std::string to_string(EnsembleKind kind);
EnsembleKind parse_ensemble(std::string_view tag);

// ---- closed forms ---------------------------------------------------------

/// E_B(perm_i) = C(n,i)² i! (r/n)^i. r may be any rational.
Rational eb_perm(int n, int i, const Rational& r);

/// E1(perm_m) = C(n,m)² m! (n!)^(−r) Σ_{m_1+⋯+m_r=m} m! ∏(n−m_j)! / ∏ m_j!.
/// The composition sum is grouped by the multiset of parts.
Rational e1_perm(int n, int m, int r);

/// E2(perm_m) = C(n,m)² r^(2m) m! (rn−m)! / (rn)!.
Rational e2_perm(int n, int m, int r);

/// The same closed forms as rational functions of n for fixed m and r
/// (Bernoulli, PermSum and Collapsed only; r must be an integer for the latter two).
RatFunc expectation_symbolic(EnsembleKind kind, int m, const Rational& r);

/// The three known exact moments of the uniform ensemble E:
/// perm_1 = nr, perm_2 = nr(rn−2r+1)/2, perm_3 = nr(n²r² − 6nr² + 3nr + 10r² − 12r + 4)/6.
Rational e_closed_small(int n, const Rational& r, int i);
RatFunc e_closed_small_symbolic(const Rational& r, int i);

// ---- enumeration of the uniform ensemble ----------------------------------

inline constexpr int kExactUniformMaxN = 6;

/// Totals over every 0-1 n×n matrix with all margins r.
struct UniformProfile {
  Integer count;                  // number of matrices
  std::vector<Integer> perm_sums; // Σ perm_m over matrices, m = 0..n
  Rational expectation(int m) const;
};

/// Backtracking over rows with remaining-column-capacity pruning. n ≤ 6.
UniformProfile exact_uniform_profile(int n, int r);
Rational exact_e_perm(int n, int r, int m);

// ---- the r = 2 uniform ensemble -------------------------------------------

/// Number of j-matchings of the cycle on 2k vertices: (2k/(2k−j))·C(2k−j, j).
Integer matching_counts_cycle(int k, int j);

/// Half-lengths of the disjoint cycles of a 2-regular bipartite graph, nonincreasing.
struct CycleType {
  std::vector<int> parts;
  int size() const;
};

/// All cycle types on 2n vertices (partitions of n into parts ≥ 2).
std::vector<CycleType> enumerate_cycle_types(int n);

/// Number of n×n 0-1 matrices with all margins 2 whose bipartite graph has
/// this cycle type: (n!)² ∏_j [k_j!(k_j−1)!/2] / (∏_j (k_j!)² · ∏_t μ_t!).
Integer cycle_type_count(const CycleType& type);

/// m-matching counts of the disjoint union, as the convolution of cycle counts.
std::vector<Integer> cycle_type_matchings(const CycleType& type);

/// Σ_λ N(λ) and Σ_λ N(λ)·conv(λ, m), summed literally over cycle types.
UniformProfile two_regular_profile_by_cycle_types(int n);

inline constexpr int kTwoRegularMaxN = 100;

/// Matching totals for every n up to n_max at once. Groups the cycle-type sum
/// by the cycle through the first row vertex:
///   a_n(x) = Σ_{k=2}^{n} C(n−1,k−1)·C(n,k)·[k!(k−1)!/2]·P_k(x)·a_{n−k}(x),
/// where P_k is the matching polynomial of the 2k-cycle.
class TwoRegularTable {
 public:
  explicit TwoRegularTable(int n_max);
  int n_max() const { return n_max_; }
  const UniformProfile& profile(int n) const;
  Rational e_perm(int n, int m) const;

 private:
  int n_max_;
  std::vector<UniformProfile> profiles_;
};

/// Exact E(perm_m) for margins 2. 2 ≤ n ≤ 100.
Rational two_regular_e_perm(int n, int m);

}  // namespace permcluster

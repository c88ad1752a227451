#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permcluster/ensembles.hpp"
#include "permcluster/expansion.hpp"
#include "permcluster/laurent.hpp"
#include "permcluster/pade.hpp"
#include "permcluster/ratfunc.hpp"

namespace permcluster {

/// Lowest admissible power of 1/r in Q_i: i/2 for even i, (i+1)/2 for odd i.
int h_index(int i);

/// lim_{n→∞} T_i(n)/n (or T̂_i with alpha) for i = 0..imax, read from one
/// symbolic table of order imax at the given integer r. Entries 0 and 1 are Zero.
std::vector<Limit> q_limits_at_r(EnsembleKind kind, int imax, int r,
                                 const std::optional<Rational>& alpha = std::nullopt);

Limit q_at_r(EnsembleKind kind, int i, int r);
Limit qhat_at(EnsembleKind kind, int i, int r, const Rational& alpha);

enum class Verdict { Holds, Fails, Inconclusive };
std::string to_string(Verdict v);

/// Q_i (or Q̂_i) as a Laurent polynomial in 1/r, fitted on r = 2..i with
/// support 1..i−1 and checked on two held-out values of r.
struct LaurentFit {
  EnsembleKind ensemble;
  int i = 0;
  std::optional<Rational> alpha;
  LaurentR q;
  std::vector<int> nodes;
  std::vector<int> held_out;
  std::map<int, Limit> limits;  // r → limit, nodes and held-out
  bool all_finite = false;
  bool held_out_ok = false;
  bool window_ok = false;  // support within [h(i), i−1]
  Verdict verdict = Verdict::Inconclusive;
  std::string witness;
};

/// Largest r that reconstructing orders up to imax will sample.
int reconstruction_max_r(int imax);

/// Reconstructs every i = 2..imax from shared per-r tables (one symbolic
/// table per r, built in parallel). ExactUniform supports imax ≤ 3.
std::vector<LaurentFit> reconstruct_all(EnsembleKind kind, int imax,
                                        const std::optional<Rational>& alpha = std::nullopt,
                                        unsigned threads = 1);

LaurentFit q_reconstruct(EnsembleKind kind, int i, unsigned threads = 1);
LaurentFit qhat_reconstruct(EnsembleKind kind, int i, const Rational& alpha, unsigned threads = 1);

// ---- conjecture verification ----------------------------------------------

struct ConjectureEntry {
  EnsembleKind ensemble;
  int i = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;  // witness for Fails, reason for Inconclusive
  std::map<int, Limit> limits;
  std::optional<LaurentR> q;
  std::optional<LaurentR> q_reference;  // Conjecture 4: the Q_i that Q̂_i is compared with
};

struct ConjectureReport {
  int conjecture = 1;
  std::vector<EnsembleKind> ensembles;
  int i_min = 2;
  int i_max = 2;
  std::optional<Rational> alpha;
  std::vector<int> r_values;  // Conjectures 1 and 3
  std::vector<ConjectureEntry> entries;
  std::vector<std::string> assumptions;

  bool any_fails() const;
  bool all_hold() const;
};

/// Conjectures:
///  1. lim T_i/n exists (checked at each r in r_values).
///  2. the limits agree across ensembles and lie in the window [h(i), i−1].
///  3. lim T̂_i/n exists at the given alpha.
///  4. Q̂_i(r) = α Q_i(r/α), i.e. â_k = α^{k+1} a_k.
/// ExactUniform entries beyond i = 3 are Inconclusive (no closed form).
ConjectureReport verify_conjecture(int conjecture, const std::vector<EnsembleKind>& ensembles, int imax,
                                   const std::optional<Rational>& alpha = std::nullopt,
                                   const std::vector<int>& r_values = {2, 3}, unsigned threads = 1);

// ---- extrapolation experiments --------------------------------------------

struct ExtrapolationRow {
  int i = 0;
  std::vector<int> n_grid;
  std::vector<Rational> samples;  // T_i(n)/n (or T̂_i(n)/n)
  std::optional<PadeResult> fit;
  std::string fit_error;     // set when the fit failed
  Limit reference;           // exact E2 limit at the same r (and alpha)
  double relative_error = 0; // |fit − reference| / |reference|
};

/// (1/n) T_i(n) for the r = 2 uniform ensemble on a five-node grid,
/// extrapolated and compared with the exact E2 limit Q_i(2).
std::vector<ExtrapolationRow> r2_extrapolate(int imax, const std::vector<int>& n_grid, unsigned threads = 1);

/// The same for T̂_i at alpha on a list of orders, compared with Q̂_i of E2.
std::vector<ExtrapolationRow> alpha_experiment(const Rational& alpha, const std::vector<int>& orders,
                                               const std::vector<int>& n_grid, unsigned threads = 1);

// ---- asymptotics ----------------------------------------------------------

/// α + (r − α) ln(1 − α/r).
double asymptotic_target(const Rational& alpha, const Rational& r);

struct AsymptoticPoint {
  int n = 0;
  int m = 0;
  Rational ratio;     // E_s(perm_m) / E_B(perm_m), exact
  double value = 0;   // (1/n) ln ratio
  double gap = 0;     // |value − target|
};

struct AsymptoticReport {
  int s = 2;
  Rational alpha;
  int r = 0;
  double target = 0;
  std::vector<AsymptoticPoint> points;
  bool monotone = false;  // gap strictly decreasing along the grid
};

/// Needs αn integral on the grid and α < r. s = 1 uses E1, s = 2 uses E2.
AsymptoticReport asymptotic_check(int s, const Rational& alpha, int r, const std::vector<int>& n_grid);

struct SumCheckReport {
  int order = 2;
  Rational alpha;
  std::vector<int> r_grid;
  std::vector<Rational> partial_sums;  // Σ_{i=2}^{N} Q̂_i(r), exact
  std::vector<double> differences;     // D(r) = target(r) − partial sum
  double exponent = 0;                 // fitted decay: |D(r)| ~ r^(−exponent)
  double required = 0;                 // (N+1)/2 − 1/4
  bool identically_zero = false;
  bool pass = false;
  static constexpr const char* kSignConvention =
      "D(r) = [alpha + (r - alpha) ln(1 - alpha/r)] - sum_{i=2}^{N} Qhat_i(r)";
};

/// Decay of the closed form minus the partial sum of Q̂_i (E2) over an r-grid.
SumCheckReport qhat_sum_check(int order, const Rational& alpha, const std::vector<int>& r_grid,
                              unsigned threads = 1);

}  // namespace permcluster

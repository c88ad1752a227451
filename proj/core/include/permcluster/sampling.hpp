#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "permcluster/ensembles.hpp"
#include "permcluster/int_matrix.hpp"

namespace permcluster {

/// Reproducible generator: std::mt19937_64 (whose output sequence the C++
/// standard fixes) seeded with splitmix64(seed). Bounded draws use rejection
/// on raw 64-bit outputs, so no implementation-defined distribution is
/// involved and samples are identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform permutation of 0..n−1 by Fisher–Yates, high index downward.
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of sub-stream `index` for a run seeded with `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Entrywise sum of r independent uniform n×n permutation matrices.
IntMatrix sample_e1(int n, int r, Rng& rng);
IntMatrix sample_e1(int n, int r, std::uint64_t seed);

/// A uniform permutation of rn objects folded onto n×n: entry (i,j) counts
/// the x with x ≡ i and σ(x) ≡ j (mod n).
IntMatrix sample_e2(int n, int r, Rng& rng);
IntMatrix sample_e2(int n, int r, std::uint64_t seed);

struct MonteCarloEstimate {
  int m = 0;
  Rational mean;         // exact sample mean
  double std_error = 0;  // sample standard deviation / √samples
};

/// Sample means of perm_m, m = 0..max_m, for PermSum or Collapsed. Samples
/// are drawn in fixed blocks with one sub-stream per block, so results do
/// not depend on the thread count.
std::vector<MonteCarloEstimate> monte_carlo_perm(EnsembleKind kind, int n, int r, int max_m,
                                                 std::uint64_t samples, std::uint64_t seed,
                                                 unsigned threads = 1);

}  // namespace permcluster

#include "permcluster/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "permcluster/parallel.hpp"

namespace permcluster {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(below(static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<std::size_t>(i)], p[j]);
  }
  return p;
}

IntMatrix sample_e1(int n, int r, Rng& rng) {
  if (n < 1 || r < 1) throw IndexOutOfRange("sample_e1: n and r must be >= 1");
  IntMatrix out(n);
  for (int t = 0; t < r; ++t) {
    const auto p = rng.permutation(n);
    for (int i = 0; i < n; ++i) out(i, p[static_cast<std::size_t>(i)]) += 1;
  }
  return out;
}

IntMatrix sample_e1(int n, int r, std::uint64_t seed) {
  Rng rng(seed);
  return sample_e1(n, r, rng);
}

IntMatrix sample_e2(int n, int r, Rng& rng) {
  if (n < 1 || r < 1) throw IndexOutOfRange("sample_e2: n and r must be >= 1");
  IntMatrix out(n);
  const auto p = rng.permutation(n * r);
  for (int x = 0; x < n * r; ++x) out(x % n, p[static_cast<std::size_t>(x)] % n) += 1;
  return out;
}

IntMatrix sample_e2(int n, int r, std::uint64_t seed) {
  Rng rng(seed);
  return sample_e2(n, r, rng);
}

namespace {
constexpr std::uint64_t kBlock = 4096;
}

std::vector<MonteCarloEstimate> monte_carlo_perm(EnsembleKind kind, int n, int r, int max_m,
                                                 std::uint64_t samples, std::uint64_t seed,
                                                 unsigned threads) {
  if (kind != EnsembleKind::PermSum && kind != EnsembleKind::Collapsed)
    throw std::invalid_argument("monte_carlo_perm: only e1 and e2 can be sampled");
  if (max_m < 0 || max_m > n) throw IndexOutOfRange("monte_carlo_perm: max_m outside 0..n");
  if (samples < 2) throw std::invalid_argument("monte_carlo_perm: need at least 2 samples");
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  const auto width = static_cast<std::size_t>(max_m) + 1;
  std::vector<std::vector<Integer>> sum(blocks), sum_sq(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    Rng rng(stream_seed(seed, b));
    std::vector<Integer> s(width, Integer(0)), s2(width, Integer(0));
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(samples, begin + kBlock);
    for (std::uint64_t t = begin; t < end; ++t) {
      const IntMatrix a = kind == EnsembleKind::PermSum ? sample_e1(n, r, rng) : sample_e2(n, r, rng);
      const auto profile = perm_m_profile(a);
      for (std::size_t m = 0; m < width; ++m) {
        s[m] += profile[m];
        s2[m] += profile[m] * profile[m];
      }
    }
    sum[b] = std::move(s);
    sum_sq[b] = std::move(s2);
  });
  std::vector<MonteCarloEstimate> out;
  const Integer count(static_cast<unsigned long>(samples));
  for (std::size_t m = 0; m < width; ++m) {
    Integer s = 0, s2 = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      s += sum[b][m];
      s2 += sum_sq[b][m];
    }
    const Rational mean(s, count);
    // unbiased variance: (Σx² − (Σx)²/N) / (N − 1)
    const Rational var = (Rational(s2) - Rational(s * s, count)) / Rational(count - 1);
    out.push_back({static_cast<int>(m), mean,
                   std::sqrt(var.to_double() / static_cast<double>(samples))});
  }
  return out;
}

}  // namespace permcluster

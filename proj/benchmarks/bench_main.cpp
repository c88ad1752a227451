#include <benchmark/benchmark.h>

#include "permcluster/ensembles.hpp"
#include "permcluster/expansion.hpp"
#include "permcluster/int_matrix.hpp"
#include "permcluster/limits.hpp"
#include "permcluster/sampling.hpp"

using namespace permcluster;

static void BM_PermMProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntMatrix a = sample_e1(n, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(perm_m_profile(a));
}
BENCHMARK(BM_PermMProfile)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_TwoRegularTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TwoRegularTable(n).profile(n).count);
}
BENCHMARK(BM_TwoRegularTable)->Arg(35)->Arg(70)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_SymbolicTable(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto p = symbolic_provider(EnsembleKind::Collapsed, Rational(3), order);
    benchmark::DoNotOptimize(build_table(p, ExpansionMode::Permanent, order).T.back());
  }
}
BENCHMARK(BM_SymbolicTable)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
  const int imax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_all(EnsembleKind::PermSum, imax).back().q);
}
BENCHMARK(BM_Reconstruct)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_perm(EnsembleKind::Collapsed, 6, 2, 6, 20000, 7));
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

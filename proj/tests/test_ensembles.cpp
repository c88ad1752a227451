#include <gtest/gtest.h>

#include <map>

#include "brute.hpp"
#include "permcluster/combinatorics.hpp"
#include "permcluster/ensembles.hpp"
#include "permcluster/errors.hpp"
#include "permcluster/int_matrix.hpp"
#include "permcluster/sampling.hpp"

using namespace permcluster;

namespace {

// Average of perm_m over every r-tuple of n×n permutation matrices.
Rational brute_e1(int n, int r, int m) {
  const auto perms = brute::all_permutations(n);
  Integer total = 0, count = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    IntMatrix a(n);
    for (auto k : idx)
      for (int i = 0; i < n; ++i) a(i, perms[k][static_cast<std::size_t>(i)]) += 1;
    total += brute::perm_m(a, m);
    count += 1;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == perms.size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  return Rational(total, count);
}

// Average of perm_m over every permutation of rn objects collapsed mod n.
Rational brute_e2(int n, int r, int m) {
  Integer total = 0, count = 0;
  for (const auto& p : brute::all_permutations(n * r)) {
    IntMatrix a(n);
    for (std::size_t i = 0; i < p.size(); ++i) a(static_cast<int>(i) % n, p[i] % n) += 1;
    total += brute::perm_m(a, m);
    count += 1;
  }
  return Rational(total, count);
}

// Matchings of size j in the cycle graph on 2k vertices.
Integer brute_cycle_matchings(int k, int j) {
  const int v = 2 * k;
  Integer count = 0;
  for (int mask = 0; mask < (1 << v); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != j) continue;
    bool ok = true;
    for (int e = 0; e < v && ok; ++e)
      if ((mask >> e & 1) && (mask >> ((e + 1) % v) & 1)) ok = false;
    if (ok) count += 1;
  }
  return count;
}

}  // namespace

TEST(IntMatrix, PermMProfile) {
  EXPECT_EQ(perm_m_of(IntMatrix::identity(3), 2), Integer(3));
  EXPECT_EQ(perm_m_of(IntMatrix::ones(2), 2), Integer(2));
  const IntMatrix a{{1, 2, 0}, {0, 1, 3}, {4, 0, 1}};
  EXPECT_EQ(perm_m_of(a, 1), Integer(a.total()));
  const auto profile = perm_m_profile(a);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(profile[static_cast<std::size_t>(m)], brute::perm_m(a, m)) << m;
  EXPECT_THROW(perm_m_of(a, 4), IndexOutOfRange);
}

TEST(IntMatrix, PermMProfileRandom) {
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    IntMatrix a(5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = static_cast<std::int64_t>(rng.below(4));
    const auto profile = perm_m_profile(a);
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(profile[static_cast<std::size_t>(m)], brute::perm_m(a, m));
  }
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(eb_perm(2, 1, Rational(1)), Rational(2));
  EXPECT_EQ(eb_perm(7, 0, Rational(3)), Rational(1));
  EXPECT_EQ(eb_perm(3, 2, Rational(2)), Rational(8));
}

TEST(PermSum, Examples) {
  EXPECT_EQ(e1_perm(2, 1, 1), Rational(2));
  EXPECT_EQ(e1_perm(2, 2, 2), Rational(3));
  EXPECT_EQ(e1_perm(5, 0, 3), Rational(1));
}

TEST(PermSum, MatchesEnumeration) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(e1_perm(n, m, 2), brute_e1(n, 2, m)) << n << " " << m;
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(e1_perm(3, m, 3), brute_e1(3, 3, m)) << m;
}

TEST(Collapsed, Examples) {
  EXPECT_EQ(e2_perm(2, 1, 1), Rational(2));
  EXPECT_EQ(e2_perm(6, 0, 2), Rational(1));
  EXPECT_EQ(e2_perm(3, 1, 2), Rational(6));
}

TEST(Collapsed, MatchesEnumeration) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(e2_perm(n, m, 2), brute_e2(n, 2, m)) << n << " " << m;
  for (int m = 0; m <= 2; ++m) EXPECT_EQ(e2_perm(2, m, 3), brute_e2(2, 3, m)) << m;
}

TEST(Symbolic, AgreesPointwise) {
  EXPECT_EQ(expectation_symbolic(EnsembleKind::Bernoulli, 1, Rational(2)), RatFunc(Poly::linear(Rational(2), Rational(0))));
  EXPECT_EQ(expectation_symbolic(EnsembleKind::Collapsed, 1, Rational(5)), RatFunc(Poly::linear(Rational(5), Rational(0))));
  for (int r = 1; r <= 3; ++r)
    for (int m = 0; m <= 4; ++m) {
      const RatFunc s1 = expectation_symbolic(EnsembleKind::PermSum, m, Rational(r));
      const RatFunc s2 = expectation_symbolic(EnsembleKind::Collapsed, m, Rational(r));
      const RatFunc sb = expectation_symbolic(EnsembleKind::Bernoulli, m, Rational(r));
      for (int n = std::max(m, 1); n <= 8; ++n) {
        EXPECT_EQ(s1(Rational(n)), e1_perm(n, m, r)) << r << " " << m << " " << n;
        EXPECT_EQ(s2(Rational(n)), e2_perm(n, m, r));
        EXPECT_EQ(sb(Rational(n)), eb_perm(n, m, Rational(r)));
      }
    }
}

TEST(ExactUniform, Examples) {
  EXPECT_EQ(exact_e_perm(3, 2, 3), Rational(2));
  EXPECT_EQ(exact_e_perm(3, 2, 2), Rational(9));
  EXPECT_EQ(exact_e_perm(5, 3, 1), Rational(15));
  EXPECT_EQ(exact_uniform_profile(3, 2).count, Integer(6));
  EXPECT_EQ(exact_uniform_profile(4, 2).count, Integer(90));
  EXPECT_EQ(exact_uniform_profile(5, 2).count, Integer(2040));
  EXPECT_EQ(exact_uniform_profile(6, 2).count, Integer(67950));
  EXPECT_EQ(exact_uniform_profile(4, 3).count, Integer(24));
  EXPECT_THROW(exact_uniform_profile(7, 2), GuardViolation);
}

TEST(ExactUniform, MatchesBruteForce) {
  for (auto [n, r] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 2}}) {
    const auto mats = brute::all_regular(n, r);
    const UniformProfile p = exact_uniform_profile(n, r);
    ASSERT_EQ(p.count, Integer(static_cast<long>(mats.size())));
    for (int m = 0; m <= n; ++m) {
      Integer total = 0;
      for (const auto& a : mats) total += perm_m_of(a, m);
      EXPECT_EQ(p.perm_sums[static_cast<std::size_t>(m)], total) << n << " " << r << " " << m;
    }
  }
}

TEST(ExactUniform, ClosedFormsSmallOrder) {
  EXPECT_EQ(e_closed_small(3, Rational(2), 3), Rational(2));
  EXPECT_EQ(e_closed_small(4, Rational(1), 2), Rational(6));
  EXPECT_EQ(e_closed_small(9, Rational(4), 1), Rational(36));
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= std::min(3, n); ++r)
      for (int i = 1; i <= std::min(3, n); ++i)
        EXPECT_EQ(e_closed_small(n, Rational(r), i), exact_e_perm(n, r, i)) << n << " " << r << " " << i;
  for (int i = 1; i <= 3; ++i) {
    const RatFunc s = e_closed_small_symbolic(Rational(2), i);
    for (int n = 3; n <= 6; ++n) EXPECT_EQ(s(Rational(n)), e_closed_small(n, Rational(2), i));
  }
}

TEST(CycleMatchings, SmallCycles) {
  EXPECT_EQ(matching_counts_cycle(2, 1), Integer(4));
  EXPECT_EQ(matching_counts_cycle(2, 2), Integer(2));
  EXPECT_EQ(matching_counts_cycle(7, 0), Integer(1));
  for (int k = 2; k <= 5; ++k)
    for (int j = 0; j <= k; ++j) EXPECT_EQ(matching_counts_cycle(k, j), brute_cycle_matchings(k, j)) << k << " " << j;
}

TEST(TwoRegular, CycleTypesAgainstEnumeration) {
  for (int n = 2; n <= 6; ++n) {
    const UniformProfile exact = exact_uniform_profile(n, 2);
    const UniformProfile types = two_regular_profile_by_cycle_types(n);
    EXPECT_EQ(types.count, exact.count) << n;
    EXPECT_EQ(types.perm_sums, exact.perm_sums) << n;
  }
  // the number of 2-regular 0-1 matrices for n = 7, 8 (OEIS A001499)
  EXPECT_EQ(two_regular_profile_by_cycle_types(7).count, Integer(3110940));
  EXPECT_EQ(two_regular_profile_by_cycle_types(8).count, Integer(187530840));
}

TEST(TwoRegular, EngineAgainstEnumeration) {
  const TwoRegularTable table(12);
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(table.e_perm(n, m), exact_e_perm(n, 2, m));
  for (int n = 7; n <= 12; ++n) {
    const UniformProfile types = two_regular_profile_by_cycle_types(n);
    EXPECT_EQ(table.profile(n).count, types.count);
    EXPECT_EQ(table.profile(n).perm_sums, types.perm_sums);
  }
  EXPECT_EQ(two_regular_e_perm(3, 3), Rational(2));
  EXPECT_EQ(two_regular_e_perm(5, 2), Rational(35));
  EXPECT_THROW(TwoRegularTable(kTwoRegularMaxN + 1), GuardViolation);
}

TEST(Sampling, PermutationsAreUniformAndValid) {
  Rng rng(123);
  std::map<std::vector<int>, int> seen;
  for (int t = 0; t < 24000; ++t) seen[rng.permutation(4)] += 1;
  EXPECT_EQ(seen.size(), 24U);
  for (const auto& [p, c] : seen) EXPECT_NEAR(c, 1000, 200);
}

TEST(Sampling, Margins) {
  for (int r = 1; r <= 3; ++r)
    for (std::uint64_t s = 0; s < 20; ++s) {
      EXPECT_TRUE(sample_e1(6, r, s).has_margins(r));
      EXPECT_TRUE(sample_e2(6, r, s).has_margins(r));
    }
  EXPECT_EQ(sample_e1(5, 1, 3).total(), 5);
  const IntMatrix p = sample_e2(5, 1, 4);
  for (int i = 0; i < 5; ++i) {
    int ones = 0;
    for (int j = 0; j < 5; ++j) ones += p(i, j) == 1;
    EXPECT_EQ(ones, 1);
  }
  EXPECT_EQ(sample_e1(5, 2, 77), sample_e1(5, 2, 77));
}

TEST(Sampling, MonteCarloWithinFiveSigma) {
  for (auto kind : {EnsembleKind::PermSum, EnsembleKind::Collapsed}) {
    const auto est = monte_carlo_perm(kind, 4, 2, 3, 200000, 7, 2);
    for (const auto& e : est) {
      const Rational exact = kind == EnsembleKind::PermSum ? e1_perm(4, e.m, 2) : e2_perm(4, e.m, 2);
      if (e.std_error == 0) {
        EXPECT_EQ(e.mean, exact);
        continue;
      }
      EXPECT_LE(std::abs((e.mean - exact).to_double()) / e.std_error, 5.0) << to_string(kind) << " m=" << e.m;
    }
  }
}

TEST(Sampling, ThreadCountDoesNotChangeEstimates) {
  const auto a = monte_carlo_perm(EnsembleKind::Collapsed, 5, 2, 4, 20000, 3, 1);
  const auto b = monte_carlo_perm(EnsembleKind::Collapsed, 5, 2, 4, 20000, 3, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    EXPECT_EQ(a[j].mean, b[j].mean);
    EXPECT_EQ(a[j].std_error, b[j].std_error);
  }
}

TEST(Combinatorics, Basics) {
  EXPECT_EQ(factorial(10), Integer(3628800));
  EXPECT_EQ(binomial(10, 3), Integer(120));
  EXPECT_EQ(binomial(3, 5), Integer(0));
  EXPECT_EQ(falling_factorial(Rational(7, 2), 2), Rational(35, 4));
  EXPECT_EQ(multinomial({2, 1, 1}), Integer(12));
  int count = 0;
  for_each_partition(10, 1, 10, 10, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 42);
}

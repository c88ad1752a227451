#include "permcluster/ensembles.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "permcluster/combinatorics.hpp"

namespace permcluster {

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Bernoulli: return "eb";
    case EnsembleKind::PermSum: return "e1";
    case EnsembleKind::Collapsed: return "e2";
    case EnsembleKind::ExactUniform: return "e";
    case EnsembleKind::TwoRegularExact: return "e-r2";
  }
  return "unknown";
}

EnsembleKind parse_ensemble(std::string_view tag) {
  if (tag == "eb") return EnsembleKind::Bernoulli;
  if (tag == "e1") return EnsembleKind::PermSum;
  if (tag == "e2") return EnsembleKind::Collapsed;
  if (tag == "e") return EnsembleKind::ExactUniform;
  if (tag == "e-r2") return EnsembleKind::TwoRegularExact;
  throw std::invalid_argument("unknown ensemble tag '" + std::string(tag) + "'");
}

namespace {

void check_index(int n, int m, const char* who) {
  if (n < 1 || m < 0 || m > n)
    throw IndexOutOfRange(std::string(who) + ": need n >= 1 and 0 <= m <= n (n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ")");
}

// (n)_k as a polynomial in n.
Poly falling_n(int k) { return Poly::falling_factorial(Rational(1), Rational(0), k); }

// Weighted partitions of m into at most r parts: weight = number of weak
// compositions of m into r parts with this multiset of nonzero parts.
template <class Visit>
void for_each_grouped_composition(int m, int r, Visit&& visit) {
  for_each_partition(m, 1, m, r, [&](const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    std::vector<int> mults;
    mults.push_back(r - static_cast<int>(parts.size()));
    for (const auto& [v, c] : mult) mults.push_back(c);
    visit(parts, multinomial(mults));
  });
}

}  // namespace

Rational eb_perm(int n, int i, const Rational& r) {
  check_index(n, i, "eb_perm");
  const Integer b = binomial(n, i);
  return Rational(b * b * factorial(i)) * (r / Rational(n)).pow(static_cast<unsigned>(i));
}

Rational e1_perm(int n, int m, int r) {
  check_index(n, m, "e1_perm");
  if (r < 1) throw IndexOutOfRange("e1_perm: r must be >= 1");
  const Integer nf = factorial(n);
  const Integer mf = factorial(m);
  Integer sum = 0;
  for_each_grouped_composition(m, r, [&](const std::vector<int>& parts, const Integer& weight) {
    Integer num = mf;
    Integer den = 1;
    for (int p : parts) {
      num *= factorial(n - p);
      den *= factorial(p);
    }
    // zero parts contribute (n − 0)!/0! = n! each
    for (std::size_t z = parts.size(); z < static_cast<std::size_t>(r); ++z) num *= nf;
    sum += weight * (num / den);
  });
  const Integer b = binomial(n, m);
  Integer nfr;
  mpz_pow_ui(nfr.get_mpz_t(), nf.get_mpz_t(), static_cast<unsigned long>(r));
  return Rational(b * b * mf * sum, nfr);
}

Rational e2_perm(int n, int m, int r) {
  check_index(n, m, "e2_perm");
  if (r < 1) throw IndexOutOfRange("e2_perm: r must be >= 1");
  const Integer b = binomial(n, m);
  Integer r2m;
  mpz_ui_pow_ui(r2m.get_mpz_t(), static_cast<unsigned long>(r), 2UL * static_cast<unsigned long>(m));
  return Rational(b * b * r2m * factorial(m) * factorial(static_cast<long>(r) * n - m),
                  factorial(static_cast<long>(r) * n));
}

RatFunc expectation_symbolic(EnsembleKind kind, int m, const Rational& r) {
  if (m < 0) throw IndexOutOfRange("expectation_symbolic: m must be >= 0");
  const Poly nm = falling_n(m);
  const Poly nm2 = nm * nm;
  switch (kind) {
    case EnsembleKind::Bernoulli: {
      // C(n,m)² m! (r/n)^m = (n)_m² r^m / (m! n^m)
      const Rational c = r.pow(static_cast<unsigned>(m)) / Rational(factorial(m));
      return RatFunc(nm2 * c, Poly(1).shifted(m));
    }
    case EnsembleKind::PermSum: {
      if (!r.is_integer() || r < Rational(1))
        throw IndexOutOfRange("expectation_symbolic: PermSum needs integer r >= 1");
      const int ri = static_cast<int>(r.numerator().get_si());
      // (n)_m² Σ_compositions ∏_j 1/(m_j! (n)_{m_j})
      RatFunc sum;
      for_each_grouped_composition(m, ri, [&](const std::vector<int>& parts, const Integer& weight) {
        Poly den(1);
        Integer fact = 1;
        for (int p : parts) {
          den *= falling_n(p);
          fact *= factorial(p);
        }
        sum += RatFunc(Poly(Rational(weight, fact)), den);
      });
      return sum * RatFunc(nm2);
    }
    case EnsembleKind::Collapsed: {
      if (!r.is_integer() || r < Rational(1))
        throw IndexOutOfRange("expectation_symbolic: Collapsed needs integer r >= 1");
      // (n)_m² r^{2m} / (m! (rn)_m)
      const Rational c = r.pow(2U * static_cast<unsigned>(m)) / Rational(factorial(m));
      return RatFunc(nm2 * c, Poly::falling_factorial(r, Rational(0), m));
    }
    case EnsembleKind::ExactUniform:
    case EnsembleKind::TwoRegularExact:
      break;
  }
  throw std::invalid_argument("expectation_symbolic: no closed form for ensemble " + to_string(kind));
}

RatFunc e_closed_small_symbolic(const Rational& r, int i) {
  const Poly n = Poly::variable();
  switch (i) {
    case 1: return RatFunc(n * r);
    case 2: return RatFunc(n * r * (n * r - Poly(Rational(2) * r - Rational(1))) * Rational(1, 2));
    case 3: {
      const Rational r2 = r * r;
      const Poly inner = n * n * r2 - n * (Rational(6) * r2 - Rational(3) * r) +
                         Poly(Rational(10) * r2 - Rational(12) * r + Rational(4));
      return RatFunc(n * r * inner * Rational(1, 6));
    }
    default: break;
  }
  throw IndexOutOfRange("e_closed_small: i must be 1, 2 or 3");
}

Rational e_closed_small(int n, const Rational& r, int i) {
  return e_closed_small_symbolic(r, i)(Rational(n));
}

// ---------------------------------------------------------------------------

Rational UniformProfile::expectation(int m) const {
  if (m < 0 || m >= static_cast<int>(perm_sums.size())) throw IndexOutOfRange("expectation: m out of range");
  if (count == 0) throw DivisionByZero("empty ensemble");
  return Rational(perm_sums[static_cast<std::size_t>(m)], count);
}

namespace {

struct UniformEnumerator {
  int n, r;
  std::vector<std::uint32_t> row_sets;  // column subsets of size r
  std::vector<int> capacity;
  IntMatrix current;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> sums;

  void run(int row) {
    if (row == n) {
      ++count;
      const auto profile = perm_m_profile(current);
      for (std::size_t m = 0; m < profile.size(); ++m) sums[m] += profile[m].get_ui();
      return;
    }
    const int rows_after = n - row - 1;
    for (std::uint32_t set : row_sets) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        const int left = capacity[static_cast<std::size_t>(j)] - ((set >> j) & 1U);
        if (left < 0 || left > rows_after) ok = false;
      }
      if (!ok) continue;
      for (int j = 0; j < n; ++j) {
        const int bit = (set >> j) & 1U;
        capacity[static_cast<std::size_t>(j)] -= bit;
        current(row, j) = bit;
      }
      run(row + 1);
      for (int j = 0; j < n; ++j) capacity[static_cast<std::size_t>(j)] += (set >> j) & 1U;
    }
  }
};

}  // namespace

UniformProfile exact_uniform_profile(int n, int r) {
  if (n < 1 || n > kExactUniformMaxN)
    throw GuardViolation("exact_e_perm: enumeration is limited to 1 <= n <= 6");
  if (r < 0 || r > n) throw IndexOutOfRange("exact_e_perm: need 0 <= r <= n");
  UniformEnumerator e{n, r, {}, std::vector<int>(static_cast<std::size_t>(n), r), IntMatrix(n), 0,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
  for (std::uint32_t s = 0; s < (1U << n); ++s)
    if (std::popcount(s) == r) e.row_sets.push_back(s);
  e.run(0);
  UniformProfile out;
  out.count = Integer(static_cast<unsigned long>(e.count));
  for (auto v : e.sums) out.perm_sums.emplace_back(static_cast<unsigned long>(v));
  return out;
}

Rational exact_e_perm(int n, int r, int m) {
  if (m < 0 || m > n) throw IndexOutOfRange("exact_e_perm: m outside 0..n");
  return exact_uniform_profile(n, r).expectation(m);
}

// ---------------------------------------------------------------------------

Integer matching_counts_cycle(int k, int j) {
  if (k < 2 || j < 0 || j > k) throw IndexOutOfRange("matching_counts_cycle: need k >= 2 and 0 <= j <= k");
  if (j == 0) return 1;
  const Integer t = Integer(2 * k) * binomial(2L * k - j, j);
  return t / (2 * k - j);
}

int CycleType::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::vector<CycleType> enumerate_cycle_types(int n) {
  std::vector<CycleType> out;
  for_each_partition(n, 2, n, n, [&](const std::vector<int>& parts) { out.push_back({parts}); });
  return out;
}

namespace {

Integer hamiltonian_cycles_kkk(int k) { return factorial(k) * factorial(k - 1) / 2; }

std::vector<Integer> cycle_matching_poly(int k) {
  std::vector<Integer> p;
  for (int j = 0; j <= k; ++j) p.push_back(matching_counts_cycle(k, j));
  return p;
}

}  // namespace

Integer cycle_type_count(const CycleType& type) {
  for (int k : type.parts)
    if (k < 2) throw IndexOutOfRange("cycle_type_count: parts must be >= 2");
  const Integer nf = factorial(type.size());
  Integer num = nf * nf;
  Integer den = 1;
  std::map<int, int> mult;
  for (int k : type.parts) {
    num *= hamiltonian_cycles_kkk(k);
    const Integer kf = factorial(k);
    den *= kf * kf;
    ++mult[k];
  }
  for (const auto& [k, mu] : mult) den *= factorial(mu);
  return num / den;
}

std::vector<Integer> cycle_type_matchings(const CycleType& type) {
  std::vector<Integer> acc{Integer(1)};
  for (int k : type.parts) {
    const auto p = cycle_matching_poly(k);
    std::vector<Integer> next(acc.size() + p.size() - 1, Integer(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += acc[i] * p[j];
    acc.swap(next);
  }
  return acc;
}

UniformProfile two_regular_profile_by_cycle_types(int n) {
  if (n < 2 || n > kTwoRegularMaxN) throw GuardViolation("two_regular: need 2 <= n <= 100");
  UniformProfile out;
  out.count = 0;
  out.perm_sums.assign(static_cast<std::size_t>(n) + 1, Integer(0));
  for (const auto& type : enumerate_cycle_types(n)) {
    const Integer count = cycle_type_count(type);
    const auto conv = cycle_type_matchings(type);
    out.count += count;
    for (std::size_t m = 0; m < conv.size(); ++m) out.perm_sums[m] += count * conv[m];
  }
  return out;
}

TwoRegularTable::TwoRegularTable(int n_max) : n_max_(n_max) {
  if (n_max < 2 || n_max > kTwoRegularMaxN) throw GuardViolation("two_regular: need 2 <= n <= 100");
  std::vector<std::vector<Integer>> cycle_poly(static_cast<std::size_t>(n_max) + 1);
  for (int k = 2; k <= n_max; ++k) cycle_poly[static_cast<std::size_t>(k)] = cycle_matching_poly(k);

  profiles_.resize(static_cast<std::size_t>(n_max) + 1);
  profiles_[0] = {Integer(1), {Integer(1)}};
  profiles_[1] = {Integer(0), {Integer(0), Integer(0)}};
  Integer scaled;
  for (int n = 2; n <= n_max; ++n) {
    UniformProfile& cur = profiles_[static_cast<std::size_t>(n)];
    cur.count = 0;
    cur.perm_sums.assign(static_cast<std::size_t>(n) + 1, Integer(0));
    for (int k = 2; k <= n; ++k) {
      const UniformProfile& rest = profiles_[static_cast<std::size_t>(n - k)];
      if (rest.count == 0) continue;
      const Integer coef = binomial(n - 1, k - 1) * binomial(n, k) * hamiltonian_cycles_kkk(k);
      cur.count += coef * rest.count;
      const auto& p = cycle_poly[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < p.size(); ++i) {
        scaled = coef * p[i];
        for (std::size_t j = 0; j < rest.perm_sums.size(); ++j)
          mpz_addmul(cur.perm_sums[i + j].get_mpz_t(), scaled.get_mpz_t(), rest.perm_sums[j].get_mpz_t());
      }
    }
  }
}

const UniformProfile& TwoRegularTable::profile(int n) const {
  if (n < 0 || n > n_max_) throw IndexOutOfRange("TwoRegularTable: n beyond table");
  return profiles_[static_cast<std::size_t>(n)];
}

Rational TwoRegularTable::e_perm(int n, int m) const {
  if (n < 2) throw IndexOutOfRange("two_regular_e_perm: n must be >= 2");
  check_index(n, m, "two_regular_e_perm");
  return profile(n).expectation(m);
}

Rational two_regular_e_perm(int n, int m) {
  if (n < 2 || n > kTwoRegularMaxN) throw GuardViolation("two_regular_e_perm: need 2 <= n <= 100");
  return TwoRegularTable(n).e_perm(n, m);
}

}  // namespace permcluster

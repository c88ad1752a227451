#include <gtest/gtest.h>

#include <random>

#include "permcluster/combinatorics.hpp"
#include "permcluster/errors.hpp"
#include "permcluster/laurent.hpp"
#include "permcluster/linalg.hpp"
#include "permcluster/poly.hpp"
#include "permcluster/ratfunc.hpp"
#include "permcluster/rational.hpp"
#include "permcluster/series.hpp"

using namespace permcluster;

namespace {

Rational random_rational(std::mt19937_64& g, int span = 50) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(num(g), den(g));
}

Poly random_poly(std::mt19937_64& g, int max_degree) {
  std::uniform_int_distribution<int> d(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(d(g)) + 1);
  for (auto& x : c) x = random_rational(g, 9);
  return Poly(c);
}

RatFunc random_ratfunc(std::mt19937_64& g) {
  Poly den;
  do den = random_poly(g, 3);
  while (den.is_zero());
  return RatFunc(random_poly(g, 3), den);
}

const Poly n = Poly::variable();

}  // namespace

TEST(Rational, Basics) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(5, 4) * Rational(4, 5), Rational(1));
  EXPECT_EQ(Rational::parse("7/10"), Rational(7, 10));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational(-6, 4).str(), "-3/2");
  EXPECT_EQ(Rational(3).str(), "3");
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(to_decimal(Rational(-1, 3), 3), "-0.333");
}

TEST(Rational, LogOfHugeValues) {
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 5000);
  EXPECT_NEAR(Rational(big).log(), 5000 * std::log(10.0), 1e-8);
  EXPECT_NEAR(Rational(Integer(1), big).log(), -5000 * std::log(10.0), 1e-8);
  EXPECT_NEAR(Rational(3, 7).log(), std::log(3.0 / 7.0), 1e-14);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 g(11);
  for (int t = 0; t < 300; ++t) {
    const Rational a = random_rational(g), b = random_rational(g), c = random_rational(g);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Poly, ArithmeticAndGcd) {
  const Poly p = n * n - Poly(1);
  const Poly q = n - Poly(1);
  EXPECT_EQ(Poly::exact_div(p, q), n + Poly(1));
  EXPECT_EQ(Poly::gcd(p, q), q);
  EXPECT_EQ(p(Rational(3)), Rational(8));
  EXPECT_EQ(Poly::falling_factorial(Rational(1), Rational(0), 3), n * (n - Poly(1)) * (n - Poly(2)));
  EXPECT_EQ(Poly(1).shifted(2), n * n);
  EXPECT_EQ((n * n * n).unshifted(2), n);
  auto [quo, rem] = Poly::divmod(n * n + Poly(1), n - Poly(1));
  EXPECT_EQ(quo, n + Poly(1));
  EXPECT_EQ(rem, Poly(2));
}

TEST(Poly, RingAxiomsAndDivision) {
  std::mt19937_64 g(5);
  for (int t = 0; t < 100; ++t) {
    const Poly a = random_poly(g, 5), b = random_poly(g, 5), c = random_poly(g, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      auto [q, r] = Poly::divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
      if (!c.is_zero()) {
        const Poly gcd = Poly::gcd(a * c, b * c);
        EXPECT_TRUE(Poly::divmod(gcd, c.monic()).second.is_zero());
      }
    }
  }
}

TEST(RatFunc, Examples) {
  const RatFunc x = RatFunc::variable();
  EXPECT_EQ(x / (x + 1) + RatFunc(1) / (x + 1), RatFunc(1));
  EXPECT_EQ(RatFunc(n * n - Poly(1), n - Poly(1)), RatFunc(n + Poly(1)));
  const RatFunc f(n * n * Rational(3) + n, n * n + Poly(1));
  EXPECT_EQ(f / f, RatFunc(1));
  EXPECT_THROW(RatFunc(n, Poly()), DivisionByZero);
  EXPECT_THROW(RatFunc(Poly(1), n)(Rational(0)), DivisionByZero);
  EXPECT_EQ(f(Rational(2)), Rational(14, 5));
}

TEST(RatFunc, FieldAxiomsOnRandomValues) {
  std::mt19937_64 g(7);
  for (int t = 0; t < 60; ++t) {
    const RatFunc a = random_ratfunc(g), b = random_ratfunc(g), c = random_ratfunc(g);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) + b, a);
    if (!is_zero(b)) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(RatFunc, Limits) {
  const Limit a = limit_over_n(RatFunc(n * n * Rational(3) + n, n * n + Poly(1)), 0);
  EXPECT_EQ(a.kind, Limit::Kind::Finite);
  EXPECT_EQ(a.value, Rational(3));
  EXPECT_EQ(limit_over_n(RatFunc(n, n * n + Poly(1)), 0).kind, Limit::Kind::Zero);
  EXPECT_EQ(limit_over_n(RatFunc(n * n * n, n + Poly(1)), 1).kind, Limit::Kind::Diverges);
  EXPECT_EQ(limit_over_n(RatFunc(n * n * Rational(5), n + Poly(1)), 1).value, Rational(5));
  EXPECT_THROW(limit_over_n(RatFunc(n * n, Poly(1)), 1).as_rational(), std::domain_error);
}

TEST(RatFunc, LimitIgnoresRepresentation) {
  std::mt19937_64 g(3);
  for (int t = 0; t < 30; ++t) {
    const RatFunc f = random_ratfunc(g);
    Poly k;
    do k = random_poly(g, 2);
    while (k.is_zero());
    const RatFunc expanded(f.num() * k, f.den() * k);
    EXPECT_EQ(limit_over_n(f, 1), limit_over_n(expanded, 1));
    EXPECT_EQ(limit_over_n(f, 0), limit_over_n(expanded, 0));
  }
}

TEST(Laurent, EvaluateAndPrint) {
  LaurentR q;
  q.set(3, Rational(-2));
  q.set(4, Rational(14, 5));
  q.set(5, Rational(0));
  EXPECT_EQ(q.terms().size(), 2U);
  EXPECT_EQ(q(Rational(2)), Rational(-2, 8) + Rational(14, 80));
  EXPECT_EQ(q.str(), "-2/r^3 + (14/5)/r^4");
  EXPECT_EQ(q.support(), std::make_pair(3, 4));
  EXPECT_THROW(q(Rational(0)), DivisionByZero);
  EXPECT_EQ(LaurentR().str(), "0");
}

TEST(Linalg, Examples) {
  const auto x = solve_linear(RationalMatrix{{1, 0}, {0, 1}}, {Rational(1, 2), Rational(2, 3)});
  EXPECT_EQ(x, (std::vector<Rational>{Rational(1, 2), Rational(2, 3)}));
  // line c0 + c1 t through (1, 1), (2, 4)
  EXPECT_EQ(solve_linear(RationalMatrix{{1, 1}, {1, 2}}, {Rational(1), Rational(4)}),
            (std::vector<Rational>{Rational(-2), Rational(3)}));
  try {
    solve_linear(RationalMatrix{{1, 1}, {1, 1}}, {Rational(1), Rational(2)});
    FAIL() << "expected SingularMatrix";
  } catch (const SingularMatrix& e) {
    EXPECT_EQ(e.rank, 1U);
  }
}

TEST(Linalg, RandomEightByEight) {
  std::mt19937_64 g(17);
  for (int t = 0; t < 10; ++t) {
    RationalMatrix a(8, 8);
    std::vector<Rational> b(8);
    for (std::size_t i = 0; i < 8; ++i) {
      b[i] = random_rational(g);
      for (std::size_t j = 0; j < 8; ++j) a(i, j) = random_rational(g);
    }
    const auto x = solve_linear(a, b);
    EXPECT_EQ(a * x, b);
  }
}

TEST(Linalg, ReducedRank) {
  const auto s = solve_reduced(RationalMatrix{{1, 1}, {2, 2}}, {Rational(3), Rational(6)});
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(s.rank, 1U);
  EXPECT_EQ(s.x[0] + s.x[1], Rational(3));
  EXPECT_FALSE(solve_reduced(RationalMatrix{{1, 1}, {2, 2}}, {Rational(3), Rational(7)}).consistent);
}

TEST(Series, LogExamples) {
  std::vector<Rational> c{Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)};
  auto t = series_log(c);
  EXPECT_EQ(t[2], Rational(1));
  EXPECT_EQ(t[3], Rational(0));
  EXPECT_EQ(t[4], Rational(-1, 2));

  std::vector<Rational> e(10);
  for (std::size_t i = 1; i < e.size(); ++i) e[i] = Rational(1) / Rational(factorial(static_cast<long>(i)));
  t = series_log(e);
  EXPECT_EQ(t[1], Rational(1));
  for (std::size_t i = 2; i < t.size(); ++i) EXPECT_TRUE(t[i].is_zero()) << i;
}

TEST(Series, LowOrderPattern) {
  std::mt19937_64 g(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c(7);
    for (std::size_t i = 2; i < c.size(); ++i) c[i] = random_rational(g);
    const auto t = series_log(c);
    EXPECT_EQ(t[2], c[2]);
    EXPECT_EQ(t[3], c[3]);
    EXPECT_EQ(t[4], c[4] - c[2] * c[2] / Rational(2));
    EXPECT_EQ(t[6], c[6] - t[4] * t[2] - t[2] * t[2] * t[2] / Rational(6) - t[3] * t[3] / Rational(2));
  }
}

TEST(Series, LogExpRoundTrip) {
  std::mt19937_64 g(29);
  for (int order = 1; order <= 12; ++order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = random_rational(g);
    const auto back = series_exp(series_log(c));
    for (std::size_t i = 1; i < c.size(); ++i) EXPECT_EQ(back[i], c[i]) << order << " " << i;
  }
}

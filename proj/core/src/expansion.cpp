#include "permcluster/expansion.hpp"

#include <cmath>
#include <stdexcept>

#include "permcluster/combinatorics.hpp"
#include "permcluster/series.hpp"

namespace permcluster {

std::string to_string(ExpansionMode mode) {
  return mode == ExpansionMode::Permanent ? "permanent" : "permanental-sum";
}

template <class F>
const F& ExpectationProvider<F>::moment(int j) const {
  if (j < 0 || j > order())
    throw IndexOutOfRange("expectation provider: perm_" + std::to_string(j) + " beyond order " +
                          std::to_string(order()));
  return moments[static_cast<std::size_t>(j)];
}

template struct ExpectationProvider<Rational>;
template struct ExpectationProvider<RatFunc>;

// ---- providers ------------------------------------------------------------

FixedProvider fixed_provider(EnsembleKind kind, int n, const Rational& r, int order) {
  if (order < 0 || order > n) throw IndexOutOfRange("fixed_provider: need 0 <= order <= n");
  FixedProvider p{kind, r, Rational(n), n, {}, {}};
  auto integer_r = [&] {
    if (!r.is_integer()) throw std::invalid_argument("ensemble " + to_string(kind) + " needs integer r");
    return static_cast<int>(r.numerator().get_si());
  };
  std::optional<UniformProfile> uniform;
  if (kind == EnsembleKind::ExactUniform) uniform = exact_uniform_profile(n, integer_r());
  std::optional<TwoRegularTable> two;
  if (kind == EnsembleKind::TwoRegularExact) {
    if (r != Rational(2)) throw std::invalid_argument("TwoRegularExact requires r = 2");
    two.emplace(n);
  }
  for (int j = 0; j <= order; ++j) {
    p.bernoulli.push_back(eb_perm(n, j, r));
    switch (kind) {
      case EnsembleKind::Bernoulli: p.moments.push_back(eb_perm(n, j, r)); break;
      case EnsembleKind::PermSum: p.moments.push_back(e1_perm(n, j, integer_r())); break;
      case EnsembleKind::Collapsed: p.moments.push_back(e2_perm(n, j, integer_r())); break;
      case EnsembleKind::ExactUniform: p.moments.push_back(uniform->expectation(j)); break;
      case EnsembleKind::TwoRegularExact: p.moments.push_back(two->e_perm(n, j)); break;
    }
  }
  return p;
}

FixedProvider fixed_provider(const TwoRegularTable& table, int n, int order) {
  if (order < 0 || order > n) throw IndexOutOfRange("fixed_provider: need 0 <= order <= n");
  FixedProvider p{EnsembleKind::TwoRegularExact, Rational(2), Rational(n), n, {}, {}};
  for (int j = 0; j <= order; ++j) {
    p.bernoulli.push_back(eb_perm(n, j, Rational(2)));
    p.moments.push_back(table.e_perm(n, j));
  }
  return p;
}

SymbolicProvider symbolic_provider(EnsembleKind kind, const Rational& r, int order) {
  if (order < 0) throw IndexOutOfRange("symbolic_provider: order must be >= 0");
  SymbolicProvider p{kind, r, RatFunc::variable(), std::nullopt, {}, {}};
  for (int j = 0; j <= order; ++j) {
    p.bernoulli.push_back(expectation_symbolic(EnsembleKind::Bernoulli, j, r));
    switch (kind) {
      case EnsembleKind::ExactUniform:
        if (j > 3) throw IndexOutOfRange("symbolic E is known in closed form only through perm_3");
        p.moments.push_back(j == 0 ? RatFunc(1) : e_closed_small_symbolic(r, j));
        break;
      case EnsembleKind::TwoRegularExact:
        throw std::invalid_argument("TwoRegularExact has no symbolic-in-n form");
      default: p.moments.push_back(expectation_symbolic(kind, j, r)); break;
    }
  }
  return p;
}

// ---- prefactors -------------------------------------------------------------

Rational f_coeff(int n, int i, int k) {
  if (k < 0 || k > i || i > n) throw IndexOutOfRange("f_coeff: need 0 <= k <= i <= n");
  const Integer num = binomial(n, i) * binomial(i, k);
  const Integer den = binomial(n, k) * binomial(n, i - k);
  return Rational(num * num, den * den);
}

RatFunc f_coeff_symbolic(int i, int k) {
  if (k < 0 || k > i) throw IndexOutOfRange("f_coeff: need 0 <= k <= i");
  // C(n,j) = (n)_j / j!; the factorials cancel against C(i,k).
  const Poly num = Poly::falling_factorial(1, 0, i) * (Rational(binomial(i, k)) / Rational(factorial(i)));
  const Poly den = Poly::falling_factorial(1, 0, k) * Poly::falling_factorial(1, 0, i - k) *
                   (Rational(1) / Rational(factorial(k) * factorial(i - k)));
  const RatFunc ratio(num, den);
  return ratio * ratio;
}

namespace {

Rational f_value(const FixedProvider& p, int i, int k) { return f_coeff(*p.fixed_n, i, k); }
RatFunc f_value(const SymbolicProvider&, int i, int k) { return f_coeff_symbolic(i, k); }

// n^i / (r^i (n)_i), optionally times (αn)_i / (n)_i.
Rational prefactor(const FixedProvider& p, int i, const std::optional<Rational>& alpha) {
  const int n = *p.fixed_n;
  if (i > n) throw IndexOutOfRange("c_term: i exceeds n");
  const Rational nn(n);
  const Rational falling_n = falling_factorial(nn, i);
  Rational out = nn.pow(static_cast<unsigned>(i)) / (p.r.pow(static_cast<unsigned>(i)) * falling_n);
  if (alpha) out *= falling_factorial(*alpha * nn, i) / falling_n;
  return out;
}

RatFunc prefactor(const SymbolicProvider& p, int i, const std::optional<Rational>& alpha) {
  const Poly falling_n = Poly::falling_factorial(1, 0, i);
  Poly num = Poly(Rational(1) / p.r.pow(static_cast<unsigned>(i))).shifted(i);
  Poly den = falling_n;
  if (alpha) {
    num *= Poly::falling_factorial(*alpha, 0, i);
    den *= falling_n;
  }
  return RatFunc(num, den);
}

template <class F>
F inner_sum(int i, const ExpectationProvider<F>& p) {
  F sum;
  for (int k = 0; k <= i; ++k) {
    const F& eb = p.bernoulli.at(static_cast<std::size_t>(k));
    const F& e = p.moment(i - k);
    if (is_zero(eb) || is_zero(e)) continue;
    F term = f_value(p, i, k) * e * eb;
    if (k % 2) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

template <class F>
F c_term(int i, const ExpectationProvider<F>& provider) {
  if (i < 0) throw IndexOutOfRange("c_term: i must be >= 0");
  return prefactor(provider, i, std::nullopt) * inner_sum(i, provider);
}

template <class F>
F c_hat_term(int i, const Rational& alpha, const ExpectationProvider<F>& provider) {
  if (i < 0) throw IndexOutOfRange("c_hat_term: i must be >= 0");
  if (alpha.sign() <= 0 || alpha > Rational(1))
    throw std::invalid_argument("c_hat_term: alpha must lie in (0, 1]");
  return prefactor(provider, i, alpha) * inner_sum(i, provider);
}

template Rational c_term(int, const FixedProvider&);
template RatFunc c_term(int, const SymbolicProvider&);
template Rational c_hat_term(int, const Rational&, const FixedProvider&);
template RatFunc c_hat_term(int, const Rational&, const SymbolicProvider&);

template <class F>
ExpansionTable<F> build_table(const ExpectationProvider<F>& provider, ExpansionMode mode, int order,
                              std::optional<Rational> alpha) {
  if (order < 2) throw IndexOutOfRange("build_table: order must be >= 2");
  if (provider.order() < order) throw IndexOutOfRange("build_table: provider order too small");
  if (mode == ExpansionMode::PermanentalSum && !alpha)
    throw std::invalid_argument("build_table: permanental-sum mode needs alpha");
  if (mode == ExpansionMode::Permanent) alpha.reset();

  ExpansionTable<F> t{provider.kind, provider.r, mode, alpha, provider.fixed_n, order, {}, {}};
  t.C.reserve(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i)
    t.C.push_back(alpha ? c_hat_term(i, *alpha, provider) : c_term(i, provider));
  if (!(t.C[0] == F(1))) throw std::logic_error("expansion self-test failed: C_0 != 1");
  if (!is_zero(t.C[1])) throw std::logic_error("expansion self-test failed: C_1 != 0");
  t.T = series_log(t.C);
  t.T[0] = F();
  return t;
}

template FixedTable build_table(const FixedProvider&, ExpansionMode, int, std::optional<Rational>);
template SymbolicTable build_table(const SymbolicProvider&, ExpansionMode, int, std::optional<Rational>);

bool reconstruction_holds(const FixedTable& table, const FixedProvider& provider) {
  if (table.symbolic()) throw std::invalid_argument("reconstruction needs a fixed-n table");
  const int n = *table.fixed_n;
  int s = n;
  if (table.mode == ExpansionMode::PermanentalSum) {
    const Rational m = *table.alpha * Rational(n);
    if (!m.is_integer()) throw std::invalid_argument("reconstruction needs an integer alpha*n");
    s = static_cast<int>(m.numerator().get_si());
  }
  if (table.order < s || provider.order() < s)
    throw IndexOutOfRange("reconstruction needs the table through order " + std::to_string(s));
  Rational sum;
  for (int i = 0; i <= s; ++i) sum += table.C[static_cast<std::size_t>(i)];
  return provider.bernoulli[static_cast<std::size_t>(s)] * sum == provider.moment(s);
}

bool convolution_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& c, int s) {
  if (s < 0 || static_cast<int>(a.size()) <= s || static_cast<int>(b.size()) <= s ||
      static_cast<int>(c.size()) <= s)
    throw IndexOutOfRange("convolution_check: profiles must cover 0..s");
  Rational rhs;
  for (int i = 0; i <= s; ++i) {
    const Integer bin = binomial(s, i);
    rhs += Rational(bin * bin) * b[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(s - i)];
  }
  return a[static_cast<std::size_t>(s)] == rhs;
}

namespace {

template <class Y, class LogAbs>
double slope_impl(const std::vector<double>& x, const std::vector<Y>& y, LogAbs log_abs) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("log_log_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (y[j] == Y(0)) throw ZeroOnGrid("log_log_slope: zero value at grid point " + std::to_string(x[j]));
    const double lx = std::log(x[j]);
    const double ly = log_abs(y[j]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

double log_log_slope(const std::vector<double>& x, const std::vector<Rational>& y) {
  return slope_impl(x, y, [](const Rational& v) { return v.abs().log(); });
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  return slope_impl(x, y, [](double v) { return std::log(std::abs(v)); });
}

GrowthEstimate growth_probe(EnsembleKind kind, const Rational& r, int i, const std::vector<int>& n_grid) {
  if (n_grid.size() < 3) throw std::invalid_argument("growth_probe: need at least 3 grid points");
  for (std::size_t j = 1; j < n_grid.size(); ++j)
    if (n_grid[j] <= n_grid[j - 1]) throw std::invalid_argument("growth_probe: grid must increase");
  GrowthEstimate g;
  g.n_grid = n_grid;
  std::vector<double> xs;
  for (int n : n_grid) {
    g.values.push_back(c_term(i, fixed_provider(kind, n, r, i)));
    xs.push_back(static_cast<double>(n));
  }
  g.slope = log_log_slope(xs, g.values);
  g.rounded = Rational(static_cast<long>(std::lround(g.slope * 100)), 100L);
  return g;
}

}  // namespace permcluster

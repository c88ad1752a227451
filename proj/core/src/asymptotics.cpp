#include <cmath>
#include <stdexcept>

#include "permcluster/limits.hpp"
#include "permcluster/parallel.hpp"

namespace permcluster {

double asymptotic_target(const Rational& alpha, const Rational& r) {
  if (r.sign() <= 0) throw std::invalid_argument("asymptotic_target: r must be positive");
  if (alpha >= r) throw std::domain_error("asymptotic_target: alpha must be < r");
  const long double a = alpha.to_double();
  const long double rr = r.to_double();
  return static_cast<double>(a + (rr - a) * std::log1p(-a / rr));
}

AsymptoticReport asymptotic_check(int s, const Rational& alpha, int r, const std::vector<int>& n_grid) {
  if (s != 1 && s != 2) throw std::invalid_argument("asymptotic_check: s must be 1 or 2");
  if (alpha.sign() <= 0) throw std::domain_error("asymptotic_check: alpha must be positive");
  if (alpha >= Rational(r)) throw std::domain_error("asymptotic_check: alpha must be < r");
  if (alpha > Rational(1)) throw std::domain_error("asymptotic_check: alpha must be <= 1 (m <= n)");
  if (n_grid.size() < 2) throw std::invalid_argument("asymptotic_check: need at least 2 grid points");

  AsymptoticReport rep;
  rep.s = s;
  rep.alpha = alpha;
  rep.r = r;
  rep.target = asymptotic_target(alpha, Rational(r));
  for (int n : n_grid) {
    const Rational am = alpha * Rational(n);
    if (!am.is_integer()) throw std::domain_error("asymptotic_check: alpha*n must be an integer at n=" + std::to_string(n));
    const int m = static_cast<int>(am.numerator().get_si());
    const Rational es = s == 1 ? e1_perm(n, m, r) : e2_perm(n, m, r);
    const Rational eb = eb_perm(n, m, Rational(r));
    AsymptoticPoint p;
    p.n = n;
    p.m = m;
    p.ratio = es / eb;
    p.value = p.ratio.log() / n;
    p.gap = std::abs(p.value - rep.target);
    rep.points.push_back(std::move(p));
  }
  rep.monotone = true;
  for (std::size_t j = 1; j < rep.points.size(); ++j)
    if (!(rep.points[j].gap < rep.points[j - 1].gap)) rep.monotone = false;
  return rep;
}

SumCheckReport qhat_sum_check(int order, const Rational& alpha, const std::vector<int>& r_grid, unsigned threads) {
  if (order < 2) throw IndexOutOfRange("qhat_sum_check: order must be >= 2");
  if (alpha.sign() < 0 || alpha > Rational(1)) throw std::invalid_argument("qhat_sum_check: alpha must lie in [0, 1]");
  if (r_grid.size() < 2) throw std::invalid_argument("qhat_sum_check: need at least 2 grid points");
  for (int r : r_grid)
    if (r < 2) throw IndexOutOfRange("qhat_sum_check: r must be >= 2");

  SumCheckReport rep;
  rep.order = order;
  rep.alpha = alpha;
  rep.r_grid = r_grid;
  rep.required = (order + 1) / 2.0 - 0.25;
  if (alpha.is_zero()) {
    rep.partial_sums.assign(r_grid.size(), Rational(0));
    rep.differences.assign(r_grid.size(), 0.0);
    rep.identically_zero = true;
    rep.pass = true;
    return rep;
  }

  rep.partial_sums.resize(r_grid.size());
  parallel_for(r_grid.size(), threads, [&](std::size_t j) {
    const auto limits = q_limits_at_r(EnsembleKind::Collapsed, order, r_grid[j], alpha);
    Rational sum;
    for (int i = 2; i <= order; ++i) {
      const Limit& l = limits[static_cast<std::size_t>(i)];
      if (l.kind == Limit::Kind::Diverges)
        throw std::domain_error("qhat_sum_check: Qhat_" + std::to_string(i) + " diverges at r=" + std::to_string(r_grid[j]));
      sum += l.as_rational();
    }
    rep.partial_sums[j] = sum;
  });
  std::vector<double> xs;
  for (std::size_t j = 0; j < r_grid.size(); ++j) {
    const long double target = asymptotic_target(alpha, Rational(r_grid[j]));
    rep.differences.push_back(static_cast<double>(target - static_cast<long double>(rep.partial_sums[j].to_double())));
    xs.push_back(r_grid[j]);
  }
  rep.exponent = -log_log_slope(xs, rep.differences);
  rep.pass = rep.exponent >= rep.required;
  return rep;
}

}  // namespace permcluster

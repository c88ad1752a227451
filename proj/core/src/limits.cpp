#include "permcluster/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "permcluster/linalg.hpp"
#include "permcluster/parallel.hpp"

namespace permcluster {

int h_index(int i) {
  if (i < 2) throw IndexOutOfRange("h_index: i must be >= 2");
  return i % 2 == 0 ? i / 2 : (i + 1) / 2;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::vector<Limit> q_limits_at_r(EnsembleKind kind, int imax, int r, const std::optional<Rational>& alpha) {
  if (imax < 2) throw IndexOutOfRange("q_limits_at_r: imax must be >= 2");
  if (r < 1) throw IndexOutOfRange("q_limits_at_r: r must be >= 1");
  const SymbolicProvider provider = symbolic_provider(kind, Rational(r), imax);
  const SymbolicTable table = build_table(
      provider, alpha ? ExpansionMode::PermanentalSum : ExpansionMode::Permanent, imax, alpha);
  std::vector<Limit> out(static_cast<std::size_t>(imax) + 1);
  for (int i = 2; i <= imax; ++i) out[static_cast<std::size_t>(i)] = limit_over_n(table.T[static_cast<std::size_t>(i)], 1);
  return out;
}

Limit q_at_r(EnsembleKind kind, int i, int r) {
  if (i < 2) throw IndexOutOfRange("q_at_r: i must be >= 2");
  return q_limits_at_r(kind, i, r)[static_cast<std::size_t>(i)];
}

Limit qhat_at(EnsembleKind kind, int i, int r, const Rational& alpha) {
  if (i < 2) throw IndexOutOfRange("qhat_at: i must be >= 2");
  return q_limits_at_r(kind, i, r, alpha)[static_cast<std::size_t>(i)];
}

// ---------------------------------------------------------------------------

int reconstruction_max_r(int imax) { return imax + 2; }

namespace {

std::string limit_witness(const Limit& l) {
  return l.kind == Limit::Kind::Finite ? l.value.str() : to_string(l.kind);
}

LaurentFit fit_one(EnsembleKind kind, int i, const std::optional<Rational>& alpha,
                   const std::map<int, std::vector<Limit>>& by_r) {
  LaurentFit fit;
  fit.ensemble = kind;
  fit.i = i;
  fit.alpha = alpha;
  for (int r = 2; r <= i; ++r) fit.nodes.push_back(r);
  fit.held_out = {i + 1, i + 2};
  fit.all_finite = true;
  for (int r = 2; r <= i + 2; ++r) {
    const Limit& l = by_r.at(r)[static_cast<std::size_t>(i)];
    fit.limits[r] = l;
    if (l.kind == Limit::Kind::Diverges) {
      fit.all_finite = false;
      fit.witness = "T_" + std::to_string(i) + "(n)/n diverges at r=" + std::to_string(r);
    }
  }
  if (!fit.all_finite) {
    fit.verdict = Verdict::Fails;
    return fit;
  }
  // Σ_{k=1}^{i−1} a_k r^{−k} = Q(r) on the nodes.
  const std::size_t unknowns = static_cast<std::size_t>(i - 1);
  RationalMatrix vandermonde(unknowns, unknowns);
  std::vector<Rational> rhs(unknowns);
  for (std::size_t row = 0; row < unknowns; ++row) {
    const Rational inv = Rational(fit.nodes[row]).inverse();
    Rational p = inv;
    for (std::size_t k = 0; k < unknowns; ++k, p *= inv) vandermonde(row, k) = p;
    rhs[row] = fit.limits.at(fit.nodes[row]).value;
  }
  try {
    const auto a = solve_linear(vandermonde, rhs);
    for (std::size_t k = 0; k < unknowns; ++k) fit.q.set(static_cast<int>(k) + 1, a[k]);
  } catch (const SingularMatrix& e) {
    fit.verdict = Verdict::Fails;
    fit.witness = e.what();
    return fit;
  }
  fit.held_out_ok = true;
  for (int r : fit.held_out) {
    const Rational predicted = fit.q(Rational(r));
    const Rational actual = fit.limits.at(r).value;
    if (predicted != actual) {
      fit.held_out_ok = false;
      fit.witness = "held-out r=" + std::to_string(r) + ": fitted " + predicted.str() + " vs limit " +
                    actual.str();
    }
  }
  fit.window_ok = true;
  const int h = h_index(i);
  for (const auto& [k, a] : fit.q.terms()) {
    if (k < h || k > i - 1) {
      fit.window_ok = false;
      if (fit.witness.empty())
        fit.witness = "coefficient of r^-" + std::to_string(k) + " is " + a.str() + ", outside [" +
                      std::to_string(h) + ", " + std::to_string(i - 1) + "]";
    }
  }
  fit.verdict = fit.held_out_ok && fit.window_ok ? Verdict::Holds : Verdict::Fails;
  return fit;
}

std::map<int, std::vector<Limit>> limits_by_r(EnsembleKind kind, int imax, const std::optional<Rational>& alpha,
                                              const std::vector<int>& r_values, unsigned threads) {
  std::vector<std::vector<Limit>> slots(r_values.size());
  parallel_for(r_values.size(), threads,
               [&](std::size_t j) { slots[j] = q_limits_at_r(kind, imax, r_values[j], alpha); });
  std::map<int, std::vector<Limit>> out;
  for (std::size_t j = 0; j < r_values.size(); ++j) out[r_values[j]] = std::move(slots[j]);
  return out;
}

}  // namespace

std::vector<LaurentFit> reconstruct_all(EnsembleKind kind, int imax, const std::optional<Rational>& alpha,
                                        unsigned threads) {
  if (imax < 2) throw IndexOutOfRange("reconstruct: imax must be >= 2");
  if (kind == EnsembleKind::ExactUniform && imax > 3)
    throw IndexOutOfRange("reconstruct: E is only available in closed form through i = 3");
  std::vector<int> rs;
  for (int r = 2; r <= reconstruction_max_r(imax); ++r) rs.push_back(r);
  const auto by_r = limits_by_r(kind, imax, alpha, rs, threads);
  std::vector<LaurentFit> out;
  for (int i = 2; i <= imax; ++i) out.push_back(fit_one(kind, i, alpha, by_r));
  return out;
}

LaurentFit q_reconstruct(EnsembleKind kind, int i, unsigned threads) {
  return reconstruct_all(kind, i, std::nullopt, threads).back();
}

LaurentFit qhat_reconstruct(EnsembleKind kind, int i, const Rational& alpha, unsigned threads) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) throw std::invalid_argument("qhat: alpha must lie in (0, 1]");
  return reconstruct_all(kind, i, alpha, threads).back();
}

// ---------------------------------------------------------------------------

bool ConjectureReport::any_fails() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::Fails; });
}

bool ConjectureReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::Holds; });
}

namespace {

constexpr int kClosedFormOrderE = 3;

int supported_imax(EnsembleKind kind, int imax) {
  return kind == EnsembleKind::ExactUniform ? std::min(imax, kClosedFormOrderE) : imax;
}

void add_inconclusive_tail(ConjectureReport& report, EnsembleKind kind, int from, int imax) {
  for (int i = from; i <= imax; ++i)
    report.entries.push_back({kind, i, Verdict::Inconclusive,
                              "E(perm_j) is known in closed form only for j <= 3", {}, {}, {}});
}

void existence_entries(ConjectureReport& report, EnsembleKind kind, int imax, unsigned threads) {
  const int top = supported_imax(kind, imax);
  if (top >= 2) {
    const auto by_r = limits_by_r(kind, top, report.alpha, report.r_values, threads);
    for (int i = 2; i <= top; ++i) {
      ConjectureEntry e{kind, i, Verdict::Holds, "", {}, {}, {}};
      for (int r : report.r_values) {
        const Limit& l = by_r.at(r)[static_cast<std::size_t>(i)];
        e.limits[r] = l;
        if (l.kind == Limit::Kind::Diverges) {
          e.verdict = Verdict::Fails;
          e.detail = "T_" + std::to_string(i) + "(n)/n diverges at r=" + std::to_string(r);
        }
      }
      report.entries.push_back(std::move(e));
    }
  }
  add_inconclusive_tail(report, kind, std::max(2, top + 1), imax);
}

bool same_coefficients(const LaurentR& a, const LaurentR& b, std::string* witness) {
  if (a == b) return true;
  std::ostringstream os;
  os << a.str() << " vs " << b.str();
  *witness = os.str();
  return false;
}

}  // namespace

ConjectureReport verify_conjecture(int conjecture, const std::vector<EnsembleKind>& ensembles, int imax,
                                   const std::optional<Rational>& alpha, const std::vector<int>& r_values,
                                   unsigned threads) {
  if (conjecture < 1 || conjecture > 4) throw std::invalid_argument("conjecture must be 1..4");
  if (imax < 2) throw IndexOutOfRange("verify: imax must be >= 2");
  if (ensembles.empty()) throw std::invalid_argument("verify: no ensembles given");
  for (auto k : ensembles)
    if (k != EnsembleKind::PermSum && k != EnsembleKind::Collapsed && k != EnsembleKind::ExactUniform)
      throw std::invalid_argument("verify: ensembles must be e1, e2 or e");
  const bool hat = conjecture == 3 || conjecture == 4;
  if (hat && !alpha) throw std::invalid_argument("conjectures 3 and 4 need alpha");
  if (alpha && (alpha->sign() <= 0 || *alpha > Rational(1)))
    throw std::invalid_argument("alpha must lie in (0, 1]");

  ConjectureReport report;
  report.conjecture = conjecture;
  report.ensembles = ensembles;
  report.i_max = imax;
  report.alpha = hat ? alpha : std::nullopt;
  report.assumptions.push_back(
      "T_i is defined by the formal logarithm of 1 + sum C_i; no convergence of sum T_i is claimed");
  if (hat)
    report.assumptions.push_back("perm_m with m = alpha*n uses the falling factorial for m!/(m-i)!");

  if (conjecture == 1 || conjecture == 3) {
    report.r_values = r_values;
    for (auto kind : ensembles) existence_entries(report, kind, imax, threads);
    return report;
  }

  if (conjecture == 2) {
    std::optional<std::vector<LaurentFit>> reference;
    EnsembleKind reference_kind = ensembles.front();
    for (auto kind : ensembles) {
      const int top = supported_imax(kind, imax);
      const auto fits = reconstruct_all(kind, top, std::nullopt, threads);
      if (!reference) {
        reference = fits;
        reference_kind = kind;
      }
      for (const auto& f : fits) {
        ConjectureEntry e{kind, f.i, f.verdict, f.witness, f.limits, f.q, {}};
        const auto& ref = (*reference)[static_cast<std::size_t>(f.i - 2)];
        if (e.verdict == Verdict::Holds && kind != reference_kind) {
          e.q_reference = ref.q;
          std::string w;
          if (!same_coefficients(f.q, ref.q, &w)) {
            e.verdict = Verdict::Fails;
            e.detail = "differs from " + to_string(reference_kind) + ": " + w;
          }
        }
        report.entries.push_back(std::move(e));
      }
      add_inconclusive_tail(report, kind, top + 1, imax);
    }
    return report;
  }

  // Conjecture 4: â_k = α^{k+1} a_k.
  for (auto kind : ensembles) {
    const int top = supported_imax(kind, imax);
    const auto plain = reconstruct_all(kind, top, std::nullopt, threads);
    const auto hatted = reconstruct_all(kind, top, alpha, threads);
    for (std::size_t j = 0; j < plain.size(); ++j) {
      const auto& p = plain[j];
      const auto& h = hatted[j];
      ConjectureEntry e{kind, h.i, Verdict::Holds, "", h.limits, h.q, p.q};
      if (p.verdict != Verdict::Holds || h.verdict != Verdict::Holds) {
        e.verdict = Verdict::Fails;
        e.detail = "reconstruction failed: " + (p.witness.empty() ? h.witness : p.witness);
      } else {
        LaurentR expected;
        for (const auto& [k, a] : p.q.terms()) expected.set(k, alpha->pow(static_cast<unsigned>(k + 1)) * a);
        std::string w;
        if (!same_coefficients(h.q, expected, &w)) {
          e.verdict = Verdict::Fails;
          e.detail = "Qhat != alpha*Q(r/alpha): " + w;
        }
      }
      report.entries.push_back(std::move(e));
    }
    add_inconclusive_tail(report, kind, top + 1, imax);
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ExtrapolationRow> extrapolate(const std::optional<Rational>& alpha, const std::vector<int>& orders,
                                          const std::vector<int>& n_grid, unsigned threads) {
  if (n_grid.size() != 5) throw std::invalid_argument("extrapolation needs a five-node n grid");
  if (orders.empty()) throw std::invalid_argument("extrapolation needs at least one order");
  const int imax = *std::max_element(orders.begin(), orders.end());
  const int n_min = *std::min_element(n_grid.begin(), n_grid.end());
  const int n_max = *std::max_element(n_grid.begin(), n_grid.end());
  if (*std::min_element(orders.begin(), orders.end()) < 2) throw IndexOutOfRange("orders must be >= 2");
  if (imax > n_min) throw IndexOutOfRange("every order must be <= the smallest grid n");
  if (n_max > kTwoRegularMaxN) throw GuardViolation("grid exceeds the r = 2 engine limit of n = 100");

  const TwoRegularTable engine(n_max);
  const ExpansionMode mode = alpha ? ExpansionMode::PermanentalSum : ExpansionMode::Permanent;
  std::vector<FixedTable> tables(n_grid.size());
  std::vector<Limit> reference;
  // n-grid tables plus the symbolic reference, all independent.
  parallel_for(n_grid.size() + 1, threads, [&](std::size_t j) {
    if (j == n_grid.size()) {
      reference = q_limits_at_r(EnsembleKind::Collapsed, imax, 2, alpha);
      return;
    }
    const FixedProvider p = fixed_provider(engine, n_grid[j], imax);
    tables[j] = build_table(p, mode, imax, alpha);
  });

  std::vector<ExtrapolationRow> rows;
  for (int i : orders) {
    ExtrapolationRow row;
    row.i = i;
    row.n_grid = n_grid;
    std::vector<PadePoint> pts;
    for (std::size_t j = 0; j < n_grid.size(); ++j) {
      const Rational v = tables[j].T[static_cast<std::size_t>(i)] / Rational(n_grid[j]);
      row.samples.push_back(v);
      pts.push_back({Rational(n_grid[j]), v});
    }
    row.reference = reference[static_cast<std::size_t>(i)];
    try {
      row.fit = pade_extrapolate(pts);
      if (row.reference.kind != Limit::Kind::Diverges) {
        const Rational ref = row.reference.value;
        const Rational diff = (row.fit->limit - ref).abs();
        row.relative_error = ref.is_zero() ? diff.to_double() : (diff / ref.abs()).to_double();
      }
    } catch (const SingularFit& e) {
      row.fit_error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ExtrapolationRow> r2_extrapolate(int imax, const std::vector<int>& n_grid, unsigned threads) {
  if (imax < 2) throw IndexOutOfRange("r2_extrapolate: imax must be >= 2");
  std::vector<int> orders;
  for (int i = 2; i <= imax; ++i) orders.push_back(i);
  return extrapolate(std::nullopt, orders, n_grid, threads);
}

std::vector<ExtrapolationRow> alpha_experiment(const Rational& alpha, const std::vector<int>& orders,
                                               const std::vector<int>& n_grid, unsigned threads) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) throw std::invalid_argument("alpha must lie in (0, 1]");
  return extrapolate(alpha, orders, n_grid, threads);
}

}  // namespace permcluster

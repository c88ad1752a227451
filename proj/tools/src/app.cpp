#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "permcluster/ensembles.hpp"
#include "permcluster/errors.hpp"
#include "permcluster/expansion.hpp"
#include "permcluster/limits.hpp"
#include "permcluster/parallel.hpp"
#include "permcluster/sampling.hpp"
#include "permcluster/serialize.hpp"

namespace permcluster::cli {
namespace {

constexpr int kQTableMaxOrder = 12;
constexpr int kExtrapolateMaxOrder = 15;
constexpr int kOracleMaxN = 6;
constexpr long kMaxSamples = 10'000'000;
constexpr int kAsymptoticMaxN = 400;

struct Options {
  std::string ensemble;
  std::string r = "2";
  std::string alpha;
  int imax = 0;
  std::string n_grid;
  std::string r_grid;
  std::string orders;
  std::string r_values = "2,3";
  int n = 4;
  long samples = 200000;
  std::uint64_t seed = 1;
  int max_m = 3;
  int conjecture = 1;
  int s = 2;
  std::string format = "json";
  bool strict = false;
  bool unsafe = false;
  unsigned threads = 0;
  std::string output;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad integer in ") + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad rational for ") + what + ": '" + text + "'");
  }
}

std::optional<Rational> parse_alpha(const Options& o) {
  if (o.alpha.empty()) return std::nullopt;
  const Rational a = parse_rational(o.alpha, "--alpha");
  if (a.sign() <= 0 || a > Rational(1)) throw UsageError("--alpha must lie in (0, 1]");
  return a;
}

int parse_int_r(const Options& o) {
  const Rational r = parse_rational(o.r, "--r");
  if (!r.is_integer() || r.sign() <= 0) throw UsageError("--r must be a positive integer");
  return static_cast<int>(r.numerator().get_si());
}

void guard(bool ok, const std::string& what, const Options& o) {
  if (!ok && !o.unsafe) throw GuardViolation(what + " (pass --unsafe-limits to override)");
}

std::vector<EnsembleKind> parse_ensembles(const std::string& text) {
  std::vector<EnsembleKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_ensemble(item));
    } catch (const std::exception&) {
      throw UsageError("unknown ensemble '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--ensemble is empty");
  return out;
}

// ---- output ---------------------------------------------------------------

struct Document {
  Json json;
  std::vector<std::vector<std::string>> csv;  // first row is the header
  int exit = kSuccess;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const Document& doc, const Json& config, const std::string& format) {
  if (format == "json") {
    Json top;
    top["config"] = config;
    for (auto it = doc.json.begin(); it != doc.json.end(); ++it) top[it.key()] = it.value();
    return top.dump(2) + "\n";
  }
  std::ostringstream os;
  for (auto it = config.begin(); it != config.end(); ++it)
    os << "# " << it.key() << "=" << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
       << "\n";
  for (const auto& row : doc.csv) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_field(row[j]);
    os << "\n";
  }
  return os.str();
}

std::string dbl(double v) { return Json(v).dump(); }

// ---- commands -------------------------------------------------------------

Document cmd_qtable(const Options& o, Json& config, unsigned threads) {
  const EnsembleKind kind = parse_ensembles(o.ensemble.empty() ? "e2" : o.ensemble).front();
  if (kind != EnsembleKind::PermSum && kind != EnsembleKind::Collapsed) throw UsageError("qtable supports e1 and e2");
  const int imax = o.imax ? o.imax : 7;
  if (imax < 2) throw UsageError("--imax must be >= 2");
  guard(imax <= kQTableMaxOrder, "--imax above " + std::to_string(kQTableMaxOrder), o);
  const auto alpha = parse_alpha(o);
  config["ensemble"] = to_string(kind);
  config["imax"] = imax;
  config["alpha"] = alpha ? Json(alpha->str()) : Json(nullptr);
  config["strict"] = o.strict;

  Document doc;
  doc.csv.push_back({"table", "i", "k", "a_k", "decimal"});
  bool failed = false;
  auto emit = [&](const char* name, const std::vector<LaurentFit>& fits) {
    Json a = Json::array();
    for (const auto& f : fits) {
      a.push_back(fit_json(f));
      failed = failed || f.verdict == Verdict::Fails;
      for (const auto& [k, v] : f.q.pairs())
        doc.csv.push_back({name, std::to_string(f.i), std::to_string(k), v.str(), to_decimal(v, 8)});
    }
    doc.json[name] = std::move(a);
  };
  emit("Q", reconstruct_all(kind, imax, std::nullopt, threads));
  if (alpha) emit("Qhat", reconstruct_all(kind, imax, alpha, threads));
  if (failed && o.strict) doc.exit = kVerificationFailed;
  return doc;
}

Document cmd_verify(const Options& o, Json& config, unsigned threads) {
  const auto kinds = parse_ensembles(o.ensemble.empty() ? "e1,e2" : o.ensemble);
  const int imax = o.imax ? o.imax : 7;
  guard(imax <= kQTableMaxOrder, "--imax above " + std::to_string(kQTableMaxOrder), o);
  const auto alpha = parse_alpha(o);
  const auto rs = parse_int_list(o.r_values, "--r-values");
  if ((o.conjecture == 3 || o.conjecture == 4) && !alpha) throw UsageError("conjectures 3 and 4 need --alpha");
  Json ens = Json::array();
  for (auto k : kinds) ens.push_back(to_string(k));
  config["conjecture"] = o.conjecture;
  config["ensemble"] = ens;
  config["imax"] = imax;
  config["alpha"] = alpha ? Json(alpha->str()) : Json(nullptr);
  config["r_values"] = rs;

  const ConjectureReport rep = verify_conjecture(o.conjecture, kinds, imax, alpha, rs, threads);
  Document doc;
  doc.json["report"] = report_json(rep);
  doc.csv.push_back({"ensemble", "i", "verdict", "detail"});
  for (const auto& e : rep.entries) doc.csv.push_back({to_string(e.ensemble), std::to_string(e.i), to_string(e.verdict), e.detail});
  if (rep.any_fails()) doc.exit = kVerificationFailed;
  return doc;
}

void extrapolation_csv(Document& doc, const std::vector<ExtrapolationRow>& rows) {
  doc.csv.push_back({"i", "fit", "limit", "limit_decimal", "reference", "reference_decimal", "relative_error"});
  for (const auto& row : rows) {
    if (!row.fit) {
      doc.csv.push_back({std::to_string(row.i), "singular", "", "", row.reference.value.str(),
                         to_decimal(row.reference.value, 8), ""});
      continue;
    }
    doc.csv.push_back({std::to_string(row.i), to_string(row.fit->fit), row.fit->limit.str(),
                       to_decimal(row.fit->limit, 8), row.reference.value.str(), to_decimal(row.reference.value, 8),
                       dbl(row.relative_error)});
  }
}

std::vector<int> grid_or(const std::string& text, std::vector<int> fallback) {
  return text.empty() ? fallback : parse_int_list(text, "--n-grid");
}

Document cmd_r2_extrapolate(const Options& o, Json& config, unsigned threads) {
  if (parse_int_r(o) != 2) throw UsageError("r2-extrapolate requires --r 2");
  const int imax = o.imax ? o.imax : 10;
  guard(imax <= kExtrapolateMaxOrder, "--imax above " + std::to_string(kExtrapolateMaxOrder), o);
  const auto grid = grid_or(o.n_grid, {50, 55, 60, 65, 70});
  config["r"] = 2;
  config["imax"] = imax;
  config["n_grid"] = grid;
  config["strict"] = o.strict;
  const auto rows = r2_extrapolate(imax, grid, threads);
  Document doc;
  doc.json["rows"] = extrapolation_json(rows);
  extrapolation_csv(doc, rows);
  const bool singular = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.fit; });
  if (singular && o.strict) doc.exit = kVerificationFailed;
  return doc;
}

Document cmd_alpha_experiment(const Options& o, Json& config, unsigned threads) {
  if (parse_int_r(o) != 2) throw UsageError("alpha-experiment requires --r 2");
  const Rational alpha = o.alpha.empty() ? Rational(7, 10) : *parse_alpha(o);
  const auto orders = o.orders.empty() ? std::vector<int>{4, 5, 6, 7, 10, 15} : parse_int_list(o.orders, "--orders");
  const int top = *std::max_element(orders.begin(), orders.end());
  guard(top <= kExtrapolateMaxOrder, "order above " + std::to_string(kExtrapolateMaxOrder), o);
  const auto grid = grid_or(o.n_grid, {15, 20, 25, 30, 35});
  config["r"] = 2;
  config["alpha"] = alpha.str();
  config["orders"] = orders;
  config["n_grid"] = grid;
  config["strict"] = o.strict;
  const auto rows = alpha_experiment(alpha, orders, grid, threads);
  Document doc;
  Json a = extrapolation_json(rows);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].fit && rows[j].reference.kind != Limit::Kind::Diverges)
      a[j]["delta"] = rational_json(rows[j].fit->limit - rows[j].reference.value);
    else
      a[j]["delta"] = nullptr;
  }
  doc.json["rows"] = std::move(a);
  extrapolation_csv(doc, rows);
  const bool singular = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.fit; });
  if (singular && o.strict) doc.exit = kVerificationFailed;
  return doc;
}

Document cmd_oracle(const Options& o, Json& config, unsigned) {
  const int n = o.n;
  const int r = parse_int_r(o);
  guard(n <= kOracleMaxN, "--n above " + std::to_string(kOracleMaxN) + " for exhaustive enumeration", o);
  if (r > n) throw UsageError("--r must not exceed --n");
  config["n"] = n;
  config["r"] = r;

  Document doc;
  Json checks = Json::array();
  doc.csv.push_back({"check", "m", "expected", "actual", "pass"});
  bool all = true;
  auto add = [&](const std::string& name, int m, const Rational& expected, const Rational& actual) {
    const bool ok = expected == actual;
    all = all && ok;
    Json c;
    c["check"] = name;
    c["m"] = m;
    c["expected"] = rational_json(expected);
    c["actual"] = rational_json(actual);
    c["pass"] = ok;
    checks.push_back(std::move(c));
    doc.csv.push_back({name, std::to_string(m), expected.str(), actual.str(), ok ? "true" : "false"});
  };

  const UniformProfile exact = exact_uniform_profile(n, r);
  for (int m = 1; m <= std::min(3, n); ++m)
    add("closed-form-small-order", m, e_closed_small(n, Rational(r), m), exact.expectation(m));
  if (r == 2) {
    const UniformProfile by_types = two_regular_profile_by_cycle_types(n);
    add("cycle-type-count", 0, Rational(exact.count), Rational(by_types.count));
    for (int m = 0; m <= n; ++m) add("two-regular-engine", m, exact.expectation(m), two_regular_e_perm(n, m));
  }
  const FixedProvider provider = fixed_provider(EnsembleKind::ExactUniform, n, Rational(r), n);
  const FixedTable table = build_table(provider, ExpansionMode::Permanent, n);
  Json recon;
  recon["n"] = n;
  recon["holds"] = reconstruction_holds(table, provider);
  all = all && recon["holds"].get<bool>();
  doc.csv.push_back({"expansion-reconstruction", std::to_string(n), "", "", recon["holds"].get<bool>() ? "true" : "false"});

  doc.json["matrix_count"] = exact.count.get_str();
  doc.json["e_perm"] = rational_json(exact.expectation(n));
  doc.json["checks"] = std::move(checks);
  doc.json["reconstruction"] = std::move(recon);
  doc.json["pass"] = all;
  if (!all) doc.exit = kVerificationFailed;
  return doc;
}

Document cmd_sample_check(const Options& o, Json& config, unsigned threads) {
  const EnsembleKind kind = parse_ensembles(o.ensemble.empty() ? "e2" : o.ensemble).front();
  if (kind != EnsembleKind::PermSum && kind != EnsembleKind::Collapsed) throw UsageError("sample-check supports e1 and e2");
  const int r = parse_int_r(o);
  if (o.samples <= 0) throw UsageError("--samples must be positive");
  guard(o.samples <= kMaxSamples, "--samples above " + std::to_string(kMaxSamples), o);
  const int max_m = std::min(o.max_m, o.n);
  config["ensemble"] = to_string(kind);
  config["n"] = o.n;
  config["r"] = r;
  config["samples"] = o.samples;
  config["seed"] = o.seed;
  config["max_m"] = max_m;

  const auto est = monte_carlo_perm(kind, o.n, r, max_m, o.samples, o.seed, threads);
  Document doc;
  Json rows = Json::array();
  doc.csv.push_back({"m", "mean", "mean_decimal", "exact", "exact_decimal", "std_error", "z", "pass"});
  bool all = true;
  for (const auto& e : est) {
    const Rational exact = kind == EnsembleKind::PermSum ? e1_perm(o.n, e.m, r) : e2_perm(o.n, e.m, r);
    const double diff = std::abs((e.mean - exact).to_double());
    const double z = e.std_error > 0 ? diff / e.std_error : (diff == 0 ? 0.0 : INFINITY);
    const bool ok = z <= 5.0;
    all = all && ok;
    Json x;
    x["m"] = e.m;
    x["mean"] = rational_json(e.mean);
    x["exact"] = rational_json(exact);
    x["std_error"] = e.std_error;
    x["z"] = std::isfinite(z) ? Json(z) : Json(nullptr);
    x["pass"] = ok;
    rows.push_back(std::move(x));
    doc.csv.push_back({std::to_string(e.m), e.mean.str(), to_decimal(e.mean, 8), exact.str(), to_decimal(exact, 8),
                       dbl(e.std_error), std::isfinite(z) ? dbl(z) : "inf", ok ? "true" : "false"});
  }
  doc.json["rows"] = std::move(rows);
  doc.json["pass"] = all;
  if (!all) doc.exit = kVerificationFailed;
  return doc;
}

Document cmd_asymptotics(const Options& o, Json& config, unsigned threads) {
  const int r = parse_int_r(o);
  const Rational alpha = o.alpha.empty() ? Rational(1, 2) : *parse_alpha(o);
  const auto grid = grid_or(o.n_grid, {20, 40, 80});
  const auto r_grid = o.r_grid.empty() ? std::vector<int>{4, 8, 16, 32} : parse_int_list(o.r_grid, "--r-grid");
  const int order = o.imax ? o.imax : 3;
  guard(*std::max_element(grid.begin(), grid.end()) <= kAsymptoticMaxN, "--n-grid above " + std::to_string(kAsymptoticMaxN), o);
  guard(order <= kQTableMaxOrder, "--imax above " + std::to_string(kQTableMaxOrder), o);
  config["s"] = o.s;
  config["alpha"] = alpha.str();
  config["r"] = r;
  config["n_grid"] = grid;
  config["imax"] = order;
  config["r_grid"] = r_grid;

  const AsymptoticReport a = asymptotic_check(o.s, alpha, r, grid);
  const SumCheckReport s = qhat_sum_check(order, alpha, r_grid, threads);
  Document doc;
  doc.json["asymptotic"] = asymptotic_json(a);
  doc.json["sum_check"] = sum_check_json(s);
  doc.csv.push_back({"part", "x", "exact", "value", "gap_or_difference"});
  for (const auto& p : a.points) doc.csv.push_back({"asymptotic", std::to_string(p.n), p.ratio.str(), dbl(p.value), dbl(p.gap)});
  for (std::size_t j = 0; j < r_grid.size(); ++j)
    doc.csv.push_back({"sum", std::to_string(r_grid[j]), s.partial_sums[j].str(), to_decimal(s.partial_sums[j], 8),
                       dbl(s.differences[j])});
  if (!a.monotone || !s.pass) doc.exit = kVerificationFailed;
  return doc;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--threads", o.threads, "Worker threads (default: PERMCLUSTER_THREADS or hardware)");
  sub->add_option("--output", o.output, "Write the document here instead of stdout");
  sub->add_flag("--unsafe-limits", o.unsafe, "Lift runtime guards");
  sub->add_flag("--strict", o.strict, "Exit 1 on any failed fit or verdict");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact cluster-expansion tables for permanents of random regular bipartite ensembles"};
  app.require_subcommand(1);

  auto* qtable = app.add_subcommand("qtable", "Laurent coefficients of Q_i (and Qhat_i with --alpha)");
  qtable->add_option("--ensemble", o.ensemble, "e1 or e2");
  qtable->add_option("--imax", o.imax, "Largest order");
  qtable->add_option("--alpha", o.alpha, "Use perm_m with m = alpha*n, e.g. 7/10");

  auto* verify = app.add_subcommand("verify", "Check conjectures 1-4");
  verify->add_option("--conjecture", o.conjecture, "1..4")->check(CLI::Range(1, 4));
  verify->add_option("--ensemble", o.ensemble, "Comma-separated list of e1, e2, e");
  verify->add_option("--imax", o.imax, "Largest order");
  verify->add_option("--alpha", o.alpha, "Needed for conjectures 3 and 4");
  verify->add_option("--r-values", o.r_values, "r values for the existence checks");

  auto* r2 = app.add_subcommand("r2-extrapolate", "Extrapolate (1/n)T_i(n) for the r = 2 uniform ensemble");
  r2->add_option("--imax", o.imax, "Largest order");
  r2->add_option("--n-grid", o.n_grid, "Five grid values of n");
  r2->add_option("--r", o.r, "Must be 2");

  auto* alpha = app.add_subcommand("alpha-experiment", "Extrapolate (1/n)That_i(n) for the r = 2 uniform ensemble");
  alpha->add_option("--alpha", o.alpha, "Default 7/10");
  alpha->add_option("--orders", o.orders, "Orders i, default 4,5,6,7,10,15");
  alpha->add_option("--n-grid", o.n_grid, "Five grid values of n");
  alpha->add_option("--r", o.r, "Must be 2");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive enumeration against closed forms");
  oracle->add_option("--n", o.n, "Matrix size");
  oracle->add_option("--r", o.r, "Row and column sum");

  auto* sample = app.add_subcommand("sample-check", "Monte Carlo means of perm_m against closed forms");
  sample->add_option("--ensemble", o.ensemble, "e1 or e2");
  sample->add_option("--n", o.n, "Matrix size");
  sample->add_option("--r", o.r, "Number of permutations");
  sample->add_option("--samples", o.samples, "Number of samples");
  sample->add_option("--seed", o.seed, "RNG seed");
  sample->add_option("--max-m", o.max_m, "Largest m");

  auto* asym = app.add_subcommand("asymptotics", "Growth of ln E(perm_m) and partial sums of Qhat_i");
  asym->add_option("--s", o.s, "1 for E1, 2 for E2")->check(CLI::Range(1, 2));
  asym->add_option("--alpha", o.alpha, "Default 1/2");
  asym->add_option("--r", o.r, "Row and column sum");
  asym->add_option("--n-grid", o.n_grid, "Values of n (alpha*n integral)");
  asym->add_option("--imax", o.imax, "Order N of the partial sum");
  asym->add_option("--r-grid", o.r_grid, "Values of r for the partial sum");

  for (auto* sub : {qtable, verify, r2, alpha, oracle, sample, asym}) add_common(sub, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const unsigned threads = o.threads ? o.threads : default_threads();
  CLI::App* chosen = app.get_subcommands().front();
  Json config;
  config["command"] = chosen->get_name();
  config["format"] = o.format;
  config["unsafe_limits"] = o.unsafe;

  Document doc;
  try {
    const std::string& c = chosen->get_name();
    if (c == "qtable") doc = cmd_qtable(o, config, threads);
    else if (c == "verify") doc = cmd_verify(o, config, threads);
    else if (c == "r2-extrapolate") doc = cmd_r2_extrapolate(o, config, threads);
    else if (c == "alpha-experiment") doc = cmd_alpha_experiment(o, config, threads);
    else if (c == "oracle") doc = cmd_oracle(o, config, threads);
    else if (c == "sample-check") doc = cmd_sample_check(o, config, threads);
    else doc = cmd_asymptotics(o, config, threads);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GuardViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }

  const std::string text = render(doc, config, o.format);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kUsageError;
    }
    f << text;
  }
  if (doc.exit != kSuccess) err << "verification failed\n";
  return doc.exit;
}

}  // namespace permcluster::cli

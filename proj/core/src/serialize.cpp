#include "permcluster/serialize.hpp"

#include <stdexcept>

namespace permcluster {

Json rational_json(const Rational& r, int significant) {
  Json j;
  j["exact"] = r.str();
  j["decimal"] = to_decimal(r, significant);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_object() && j.contains("exact")) return Rational::parse(j.at("exact").get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("rational_from_json: expected a rational string");
}

Json laurent_json(const LaurentR& q) {
  Json j;
  j["text"] = q.str();
  Json terms = Json::array();
  for (const auto& [k, a] : q.pairs()) {
    Json t;
    t["k"] = k;
    t["a"] = rational_json(a);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentR laurent_from_json(const Json& j) {
  LaurentR q;
  for (const auto& t : j.at("terms")) q.set(t.at("k").get<int>(), rational_from_json(t.at("a")));
  return q;
}

namespace {

Json coeff_array(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Json optional_rational(const std::optional<Rational>& r) { return r ? rational_json(*r) : Json(nullptr); }

template <class F>
Json table_common(const ExpansionTable<F>& t) {
  Json j;
  j["ensemble"] = to_string(t.ensemble);
  j["r"] = t.r.str();
  j["mode"] = to_string(t.mode);
  j["alpha"] = t.alpha ? Json(t.alpha->str()) : Json(nullptr);
  j["n"] = t.fixed_n ? Json(*t.fixed_n) : Json("symbolic");
  j["order"] = t.order;
  return j;
}

Json limits_map(const std::map<int, Limit>& limits) {
  Json a = Json::array();
  for (const auto& [r, l] : limits) {
    Json e;
    e["r"] = r;
    e["limit"] = limit_json(l);
    a.push_back(std::move(e));
  }
  return a;
}

}  // namespace

Json ratfunc_json(const RatFunc& f) {
  Json j;
  j["text"] = f.str();
  j["num_coeffs"] = coeff_array(f.num());
  j["den_coeffs"] = coeff_array(f.den());
  return j;
}

Json limit_json(const Limit& l) {
  Json j;
  j["kind"] = to_string(l.kind);
  j["value"] = l.kind == Limit::Kind::Diverges ? Json(nullptr) : rational_json(l.value);
  return j;
}

Json table_json(const FixedTable& t) {
  Json j = table_common(t);
  Json rows = Json::array();
  for (int i = 0; i <= t.order; ++i) {
    Json row;
    row["i"] = i;
    row["C"] = rational_json(t.C[static_cast<std::size_t>(i)]);
    row["T"] = rational_json(t.T[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json table_json(const SymbolicTable& t) {
  Json j = table_common(t);
  Json rows = Json::array();
  for (int i = 0; i <= t.order; ++i) {
    Json row;
    row["i"] = i;
    row["C"] = ratfunc_json(t.C[static_cast<std::size_t>(i)]);
    row["T"] = ratfunc_json(t.T[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json fit_json(const LaurentFit& f) {
  Json j;
  j["ensemble"] = to_string(f.ensemble);
  j["i"] = f.i;
  j["alpha"] = optional_rational(f.alpha);
  j["h"] = h_index(f.i);
  j["q"] = laurent_json(f.q);
  j["nodes"] = f.nodes;
  j["held_out"] = f.held_out;
  j["limits"] = limits_map(f.limits);
  j["all_finite"] = f.all_finite;
  j["held_out_ok"] = f.held_out_ok;
  j["window_ok"] = f.window_ok;
  j["verdict"] = to_string(f.verdict);
  j["witness"] = f.witness;
  return j;
}

Json report_json(const ConjectureReport& r) {
  Json j;
  j["conjecture"] = r.conjecture;
  Json ens = Json::array();
  for (auto k : r.ensembles) ens.push_back(to_string(k));
  j["ensembles"] = std::move(ens);
  j["i_range"] = {r.i_min, r.i_max};
  j["alpha"] = optional_rational(r.alpha);
  j["r_values"] = r.r_values;
  j["assumptions"] = r.assumptions;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["ensemble"] = to_string(e.ensemble);
    x["i"] = e.i;
    x["verdict"] = to_string(e.verdict);
    x["detail"] = e.detail;
    x["limits"] = limits_map(e.limits);
    x["q"] = e.q ? laurent_json(*e.q) : Json(nullptr);
    x["q_reference"] = e.q_reference ? laurent_json(*e.q_reference) : Json(nullptr);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["summary"] = r.any_fails() ? "fails" : (r.all_hold() ? "holds" : "inconclusive");
  return j;
}

Json extrapolation_json(const std::vector<ExtrapolationRow>& rows) {
  Json a = Json::array();
  for (const auto& row : rows) {
    Json x;
    x["i"] = row.i;
    x["n_grid"] = row.n_grid;
    Json samples = Json::array();
    for (const auto& s : row.samples) samples.push_back(rational_json(s));
    x["samples"] = std::move(samples);
    if (row.fit) {
      Json fit;
      fit["limit"] = rational_json(row.fit->limit);
      fit["form"] = to_string(row.fit->fit);
      fit["rank"] = row.fit->rank;
      Json coeffs = Json::array();
      for (const auto& c : row.fit->coefficients) coeffs.push_back(c.str());
      fit["coefficients"] = std::move(coeffs);
      x["fit"] = std::move(fit);
    } else {
      x["fit"] = nullptr;
      x["fit_error"] = row.fit_error;
    }
    x["reference"] = limit_json(row.reference);
    x["relative_error"] = row.fit ? Json(row.relative_error) : Json(nullptr);
    a.push_back(std::move(x));
  }
  return a;
}

Json asymptotic_json(const AsymptoticReport& r) {
  Json j;
  j["s"] = r.s;
  j["alpha"] = rational_json(r.alpha);
  j["r"] = r.r;
  j["target"] = r.target;
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json x;
    x["n"] = p.n;
    x["m"] = p.m;
    x["ratio"] = rational_json(p.ratio);
    x["value"] = p.value;
    x["gap"] = p.gap;
    pts.push_back(std::move(x));
  }
  j["points"] = std::move(pts);
  j["monotone"] = r.monotone;
  return j;
}

Json sum_check_json(const SumCheckReport& r) {
  Json j;
  j["order"] = r.order;
  j["alpha"] = rational_json(r.alpha);
  j["sign_convention"] = SumCheckReport::kSignConvention;
  Json pts = Json::array();
  for (std::size_t k = 0; k < r.r_grid.size(); ++k) {
    Json x;
    x["r"] = r.r_grid[k];
    x["partial_sum"] = rational_json(r.partial_sums[k]);
    x["difference"] = r.differences[k];
    pts.push_back(std::move(x));
  }
  j["points"] = std::move(pts);
  j["exponent"] = r.identically_zero ? Json(nullptr) : Json(r.exponent);
  j["required"] = r.required;
  j["identically_zero"] = r.identically_zero;
  j["pass"] = r.pass;
  return j;
}

Json monte_carlo_json(const std::vector<MonteCarloEstimate>& estimates) {
  Json a = Json::array();
  for (const auto& e : estimates) {
    Json x;
    x["m"] = e.m;
    x["mean"] = rational_json(e.mean);
    x["std_error"] = e.std_error;
    a.push_back(std::move(x));
  }
  return a;
}

}  // namespace permcluster

#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "permcluster/expansion.hpp"
#include "permcluster/laurent.hpp"
#include "permcluster/limits.hpp"
#include "permcluster/rational.hpp"
#include "permcluster/ratfunc.hpp"
#include "permcluster/sampling.hpp"

namespace permcluster {

using Json = nlohmann::ordered_json;

/// {"exact": "p/q", "decimal": "..."}; the decimal never stands alone.
Json rational_json(const Rational& r, int significant = 8);
/// Parses the "exact" field written by rational_json, or a bare "p/q" string.
Rational rational_from_json(const Json& j);

Json laurent_json(const LaurentR& q);
LaurentR laurent_from_json(const Json& j);

Json ratfunc_json(const RatFunc& f);
Json limit_json(const Limit& l);

Json table_json(const FixedTable& t);
Json table_json(const SymbolicTable& t);

Json fit_json(const LaurentFit& f);
Json report_json(const ConjectureReport& r);
Json extrapolation_json(const std::vector<ExtrapolationRow>& rows);
Json asymptotic_json(const AsymptoticReport& r);
Json sum_check_json(const SumCheckReport& r);
Json monte_carlo_json(const std::vector<MonteCarloEstimate>& estimates);

}  // namespace permcluster

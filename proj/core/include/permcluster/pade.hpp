#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "permcluster/rational.hpp"

namespace permcluster {

struct PadePoint {
  Rational n;
  Rational value;
};

/// How the ratio-of-quadratics fit was obtained.
///  - MonicDenominator: (a0 + a1 n + a2 n²)/(b0 + b1 n + n²), a nonsingular 5×5 system.
///  - UnitConstant: fallback (a0 + a1 n + a2 n²)/(1 + b1 n + b2 n²).
///  - ReducedRank: the monic system is singular but consistent, meaning the
///    data is exactly a lower-order rational function; every solution has
///    the same a2, and the one with free unknowns at zero is reported.
enum class PadeFit { MonicDenominator, UnitConstant, ReducedRank };
std::string to_string(PadeFit fit);

struct PadeResult {
  Rational limit;  // the n → ∞ value of the fitted ratio
  PadeFit fit = PadeFit::MonicDenominator;
  std::size_t rank = 5;
  std::vector<Rational> coefficients;  // unknowns in the order of the fit form
};

/// No fit form admits a solution; carries the node set.
struct SingularFit : std::runtime_error {
  SingularFit(const std::string& what, std::vector<Rational> nodes)
      : std::runtime_error(what), nodes(std::move(nodes)) {}
  std::vector<Rational> nodes;
};

/// Fits a ratio of quadratics in n through five exact points and returns its limit.
PadeResult pade_extrapolate(const std::vector<PadePoint>& points);

}  // namespace permcluster

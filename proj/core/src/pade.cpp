#include "permcluster/pade.hpp"

#include <set>

#include "permcluster/linalg.hpp"

namespace permcluster {

std::string to_string(PadeFit fit) {
  switch (fit) {
    case PadeFit::MonicDenominator: return "monic-denominator";
    case PadeFit::UnitConstant: return "unit-constant-denominator";
    case PadeFit::ReducedRank: return "reduced-rank";
  }
  return "unknown";
}

PadeResult pade_extrapolate(const std::vector<PadePoint>& points) {
  std::vector<Rational> nodes;
  for (const auto& p : points) nodes.push_back(p.n);
  if (points.size() != 5) throw std::invalid_argument("pade_extrapolate: exactly five points are required");
  if (std::set<Rational>(nodes.begin(), nodes.end()).size() != 5)
    throw SingularFit("pade_extrapolate: nodes must be distinct", nodes);

  // (a0 + a1 n + a2 n²) − v (b0 + b1 n) = v n²
  RationalMatrix monic(5, 5);
  std::vector<Rational> monic_rhs(5);
  // (a0 + a1 n + a2 n²) − v (b1 n + b2 n²) = v
  RationalMatrix unit(5, 5);
  std::vector<Rational> unit_rhs(5);
  for (std::size_t row = 0; row < 5; ++row) {
    const Rational& n = points[row].n;
    const Rational& v = points[row].value;
    const Rational n2 = n * n;
    monic(row, 0) = 1;
    monic(row, 1) = n;
    monic(row, 2) = n2;
    monic(row, 3) = -v;
    monic(row, 4) = -v * n;
    monic_rhs[row] = v * n2;
    unit(row, 0) = 1;
    unit(row, 1) = n;
    unit(row, 2) = n2;
    unit(row, 3) = -v * n;
    unit(row, 4) = -v * n2;
    unit_rhs[row] = v;
  }

  try {
    auto x = solve_linear(monic, monic_rhs);
    return {x[2], PadeFit::MonicDenominator, 5, x};
  } catch (const SingularMatrix&) {
  }
  try {
    auto x = solve_linear(unit, unit_rhs);
    if (!x[4].is_zero()) return {x[2] / x[4], PadeFit::UnitConstant, 5, x};
  } catch (const SingularMatrix&) {
  }
  const ReducedSolution red = solve_reduced(monic, monic_rhs);
  if (red.consistent) return {red.x[2], PadeFit::ReducedRank, red.rank, red.x};
  throw SingularFit("pade_extrapolate: no ratio of quadratics fits these points", nodes);
}

}  // namespace permcluster

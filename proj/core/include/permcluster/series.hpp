#pragma once

#include <cstddef>
#include <vector>

#include "permcluster/rational.hpp"

namespace permcluster {

// Formal power series helpers over any exact field F that supports +, −, ×
// and division by a Rational. Index 0 of every vector is the x^0 slot and
// is ignored on input; the implied constant term is 1 for series_log and 0
// for series_exp.

/// Coefficients t_1..t_N with exp(Σ t_i x^i) = 1 + Σ c_i x^i through order N,
/// via i·t_i = i·c_i − Σ_{k=1}^{i−1} k·t_k·c_{i−k}.
template <class F>
std::vector<F> series_log(const std::vector<F>& c) {
  std::vector<F> t(c.size());
  for (std::size_t i = 1; i < c.size(); ++i) {
    F acc = c[i] * Rational(static_cast<long>(i));
    for (std::size_t k = 1; k < i; ++k) {
      if (is_zero(t[k]) || is_zero(c[i - k])) continue;
      acc -= t[k] * c[i - k] * Rational(static_cast<long>(k));
    }
    t[i] = acc / Rational(static_cast<long>(i));
  }
  return t;
}

/// Coefficients c_1..c_N with 1 + Σ c_i x^i = exp(Σ t_i x^i) through order N.
template <class F>
std::vector<F> series_exp(const std::vector<F>& t) {
  // g = exp(t): i·g_i = Σ_{k=1}^{i} k·t_k·g_{i−k}, g_0 = 1.
  std::vector<F> g(t.size());
  for (std::size_t i = 1; i < t.size(); ++i) {
    F acc = t[i] * Rational(static_cast<long>(i));
    for (std::size_t k = 1; k < i; ++k) {
      if (is_zero(t[k]) || is_zero(g[i - k])) continue;
      acc += t[k] * g[i - k] * Rational(static_cast<long>(k));
    }
    g[i] = acc / Rational(static_cast<long>(i));
  }
  return g;
}

}  // namespace permcluster

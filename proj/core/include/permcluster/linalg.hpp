#pragma once

#include <cstddef>
#include <vector>

#include "permcluster/rational.hpp"

namespace permcluster {

/// Row-major dense matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rational> operator*(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Solves A·x = b exactly by Gaussian elimination over the rationals.
/// A must be square; throws SingularMatrix (carrying the rank) otherwise.
std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

/// Result of solving a possibly rank-deficient system.
struct ReducedSolution {
  std::vector<Rational> x;  // free variables set to zero
  std::size_t rank = 0;
  bool consistent = false;
};

/// Row-reduces [A | b] for any shape; when consistent returns the particular
/// solution with every free variable set to zero.
ReducedSolution solve_reduced(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace permcluster

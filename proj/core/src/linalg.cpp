#include "permcluster/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace permcluster {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

namespace {

// In-place reduced row echelon form of the augmented matrix; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t coef_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < coef_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalMatrix augment(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
  RationalMatrix m(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[i];
  }
  return m;
}

}  // namespace

std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_linear: matrix must be square");
  RationalMatrix m = augment(a, b);
  const auto pivots = row_reduce(m, a.cols());
  if (pivots.size() < a.cols()) throw SingularMatrix(pivots.size(), a.cols());
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) x[i] = m(i, a.cols());
  return x;
}

ReducedSolution solve_reduced(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix m = augment(a, b);
  const auto pivots = row_reduce(m, a.cols());
  ReducedSolution out;
  out.rank = pivots.size();
  out.consistent = true;
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    if (!m(i, a.cols()).is_zero()) out.consistent = false;
  out.x.assign(a.cols(), Rational(0));
  if (out.consistent)
    for (std::size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = m(i, a.cols());
  return out;
}

}  // namespace permcluster

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permcluster {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Raised by the exact linear solver; carries the rank that elimination found.
struct SingularMatrix : std::runtime_error {
  SingularMatrix(std::size_t rank, std::size_t size)
      : std::runtime_error("singular matrix: rank " + std::to_string(rank) + " of " +
                           std::to_string(size)),
        rank(rank),
        size(size) {}
  std::size_t rank;
  std::size_t size;
};

/// An index outside an operation's declared domain.
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// An exponential-cost or runtime guard was exceeded.
struct GuardViolation : std::length_error {
  using std::length_error::length_error;
};

}  // namespace permcluster

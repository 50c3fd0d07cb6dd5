#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace smp {

// Shape disagreement between operands (non-square, mismatched sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (negative entry,
// non-stochastic row, bad distribution parameter, out-of-range state).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Pivot fell below the working-precision threshold during factorization.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t pivot_index, const std::string& what)
      : std::runtime_error(what), pivot_index_(pivot_index) {}
  std::size_t pivot_index() const { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

// Iterative method exhausted its iteration budget without converging.
class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Target state is not universally accessible; carries the offending sources.
class UaViolationError : public std::runtime_error {
 public:
  UaViolationError(int target, std::vector<int> unreachable_sources,
                   const std::string& what)
      : std::runtime_error(what),
        target_(target),
        unreachable_sources_(std::move(unreachable_sources)) {}
  int target() const { return target_; }
  const std::vector<int>& unreachable_sources() const {
    return unreachable_sources_;
  }

 private:
  int target_;
  std::vector<int> unreachable_sources_;
};

// The graph-theoretic UA test and the linear solver disagreed.  This is an
// invariant breach, not a user error.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Operation requires the other model flavor (moments vs distributions).
class UnsupportedOperationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external data (trace rows, model files); carries a 1-based
// row/line number when known, 0 otherwise.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what, std::size_t row = 0)
      : std::runtime_error(what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// Estimation input misses data for rows the process can actually reach.
class IncompleteDataError : public std::runtime_error {
 public:
  IncompleteDataError(std::vector<int> rows, const std::string& what)
      : std::runtime_error(what), rows_(std::move(rows)) {}
  const std::vector<int>& rows() const { return rows_; }

 private:
  std::vector<int> rows_;
};

}  // namespace smp

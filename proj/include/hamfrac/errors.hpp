#pragma once

#include <stdexcept>
#include <string>

namespace hamfrac {

/// Argument outside the admissible domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two series (or fields) that do not share alpha, psi, lower terminal or grid.
class IncompatibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated series failed to reach its tail tolerance.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double last_term)
      : std::runtime_error(what), last_term_(last_term) {}

  double last_term() const noexcept { return last_term_; }

 private:
  double last_term_;
};

}  // namespace hamfrac

#pragma once

#include <stdexcept>
#include <string>

namespace polycensus {

/// The 128-bit working width was exceeded. Never raised after a silent wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A query would exceed its configured enumeration or memory budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// An internal consistency check failed; indicates a bug or a violated
/// mathematical assumption.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polycensus

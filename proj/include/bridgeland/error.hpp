#pragma once

#include <stdexcept>
#include <string>

namespace bridgeland {

// Malformed input: wrong dimensions, invalid lattice, charge outside the
// admissible half-plane, unparsable numbers. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input was well-formed but the computation could not be completed
// (degenerate charge, exhausted enumeration budget). Exit code 2.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public ComputationError {
 public:
  BudgetExceeded(const std::string& what, std::string bound_reached)
      : ComputationError(what), bound_reached_(std::move(bound_reached)) {}

  const std::string& bound_reached() const { return bound_reached_; }

 private:
  std::string bound_reached_;
};

}  // namespace bridgeland

#pragma once

#include <stdexcept>
#include <string>

namespace depflow {

/// Violated precondition or misconfiguration. CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure (divergence, degenerate input). CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace depflow

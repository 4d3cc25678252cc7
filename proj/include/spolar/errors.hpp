#pragma once

#include <stdexcept>
#include <string>

namespace spolar {

/// Violated mathematical precondition (wrong derivative sign, s below a
/// positive-definiteness threshold, degree cap, malformed input).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure (root finder did not converge, degenerate rule).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spolar

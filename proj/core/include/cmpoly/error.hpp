#pragma once

#include <stdexcept>
#include <string>

namespace cmpoly {

/// Raised when a caller violates an operation's preconditions: mismatched
/// dimensions, malformed input, unknown catalog names.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact computation cannot produce its result, e.g. a
/// degenerate metric or a singular system where a solution was required.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmpoly

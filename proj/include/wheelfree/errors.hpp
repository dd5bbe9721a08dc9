#pragma once

#include <stdexcept>
#include <string>

namespace wheelfree {

// Error classes map one-to-one onto the CLI exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graph6 / edge-list / certificate input.
struct ParseError : Error {
  using Error::Error;
};

// An input violates an operation's precondition (out of range index,
// not an edge, graph outside the required class, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A time or size budget ran out before a definite answer was reached.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A verified construction failed its own check. Never expected.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace wheelfree

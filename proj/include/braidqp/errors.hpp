#pragma once

#include <stdexcept>

namespace braidqp {

/// Input token is not a signed integer.
struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generator index outside [1, n] (or 0).
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Positive word is not square-free, i.e. does not divide the half twist.
struct NotSimpleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured cap (word length, state count, search depth) was exceeded.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug, not a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace braidqp

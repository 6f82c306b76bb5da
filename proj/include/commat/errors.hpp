// Error types shared across the library.
#pragma once

#include <stdexcept>

namespace commat {

// Operand shapes do not fit the requested operation.
struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A product over an infinite inner dimension was requested without a
// declared lower-triangularity bound on both factors.
struct tameness_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A verification configuration violates its precondition (e.g. n >= m).
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace commat

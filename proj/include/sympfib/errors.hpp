#pragma once

#include <stdexcept>
#include <string>

namespace sympfib {

// Shape or parity mismatch (e.g. odd-dimensional input to a symplectic test).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A domain-type invariant failed (non-unitary input, non-PD imaginary part, ...).
struct InvariantViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative numeric procedure failed to converge; message carries the residual.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sympfib

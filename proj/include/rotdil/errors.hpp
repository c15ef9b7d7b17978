#pragma once

#include <stdexcept>

namespace rotdil {

// Precondition failure on a gated operation (e.g. non-rotational input).
struct GateError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed user input: matrix text, grid sizes, flag values.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invalid or unreadable mask data; message carries the JSON path when known.
struct MaskError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A residual gate that should never trip; indicates a numerics bug.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rotdil

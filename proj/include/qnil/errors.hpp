#pragma once

#include <stdexcept>
#include <string>

namespace qnil {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched shapes or fields in a matrix/vector operation.
struct dimension_error : error {
    using error::error;
};

// Division by the zero scalar.
struct division_by_zero : error {
    using error::error;
};

// Malformed or axiom-violating input data (CLI exit code 2).
struct invalid_input : error {
    using error::error;
};

// Im(d^{N-k}) is not contained in ker(d^k): the data is not an N-complex.
struct inclusion_violation : error {
    using error::error;
};

// A map does not descend to the requested quotients.
struct not_well_defined : error {
    using error::error;
};

// A truncated complex is too short to determine the requested value.
struct indeterminate_error : error {
    using error::error;
};

// A per-degree dimension exceeded the configured resource cap (CLI exit code 3).
struct cap_exceeded : error {
    using error::error;
};

} // namespace qnil

#pragma once

#include <stdexcept>

namespace lefzeta {

// Malformed input files or fixture names. CLI exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates an algebra axiom or a map precondition
// (degree mismatch, missing image, relation violation, ...). CLI exit code 3.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was asked of a presentation whose shape does not support it,
// including forced --mode requests. CLI exit code 4.
struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lefzeta

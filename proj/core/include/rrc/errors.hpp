#pragma once

#include <stdexcept>
#include <string>

namespace rrc {

// A scalar has no n-th root inside its own coefficient field.
struct NotAPower : std::domain_error {
    using std::domain_error::domain_error;
};

// Two quadratic scalars over distinct discriminants met in one operation.
struct FieldMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

// A series coefficient was requested at or beyond the precision bound.
struct PrecisionError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A system or polynomial violates a structural precondition (weights,
// multiplier-freeness, equation shape).
struct ShapeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed textual input: scalars, expressions, system files, CLI values.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace rrc

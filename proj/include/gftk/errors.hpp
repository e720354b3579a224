#pragma once

#include <stdexcept>
#include <string>

namespace gftk {

// Dividing by a series that is zero through its known precision.
struct DivisionByZeroSeries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument to an operation (parse failure, k < 0 in binomial,
// composition with non-positive inner valuation, scalar field mismatch, ...).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// hensel_lift precondition violated: t0 must satisfy D(t0,0) = 0 and dD/dt(t0,0) != 0.
struct NotASimpleRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Branch expansion would need ramification > 2, a non-rational leading root,
// a nested/imaginary extension, or a recentering shape outside the supported one.
struct UnsupportedRamification : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded branch has multiplicity > 1 at z = 0; the simple-pole residue
// formula downstream would be invalid.
struct MultipleBoundedRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The derivative of the denominator vanishes identically on a branch.
struct ResidueUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Too few coefficients for the requested guessing bounds.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gftk

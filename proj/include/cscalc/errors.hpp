#pragma once

#include <stdexcept>
#include <string>

namespace cscalc {

struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inverse requested for an element that has none (zero, or not a monomial).
struct InvalidInverse : CalcError {
    using CalcError::CalcError;
};

/// Series inversion with a non-invertible leading term.
struct NotInvertible : CalcError {
    using CalcError::CalcError;
};

/// log of a series whose constant term is not 1, or det^{1/2} of f with f(0) != 1.
struct BranchError : CalcError {
    using CalcError::CalcError;
};

/// Incompatible chart dimension or matrix rank.
struct ShapeError : CalcError {
    using CalcError::CalcError;
};

/// Infinite series applied to a matrix with non-nilpotent 0-form part.
struct NotNilpotent : CalcError {
    using CalcError::CalcError;
};

/// q-expansion is not in the modular-form ring of the requested weight.
struct NotInRing : CalcError {
    using CalcError::CalcError;
};

/// Connection pair claims flatness but has nonzero curvature.
struct FlatnessViolation : CalcError {
    using CalcError::CalcError;
};

/// Random draw failed a non-degeneracy requirement after bounded retries.
struct DegenerateScenario : CalcError {
    using CalcError::CalcError;
};

} // namespace cscalc

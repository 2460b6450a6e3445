#pragma once

#include <stdexcept>

namespace csforge {

/// Inputs whose dimensions must agree do not.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation requires a square matrix.
struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix fails the symmetry tolerance.
struct NotSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix is not a symmetric idempotent within tolerance.
struct NotAProjection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Permutation length does not match the tensor order 2p.
struct PermutationLengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Composition parts do not sum to the stated k.
struct SumMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested object exceeds the dense desk-scale guard.
struct SizeGuardExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exponent outside the range the operation is defined for.
struct ExponentOutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

/// Entrywise real power of a negative entry with a non-integer exponent.
struct NegativeBaseNonIntegerExponent : std::domain_error {
    using std::domain_error::domain_error;
};

/// Negative scalar where a non-negative one is required.
struct NegativeInput : std::domain_error {
    using std::domain_error::domain_error;
};

/// Strict-mode input with entries that are not strictly positive.
struct NonPositiveEntries : std::domain_error {
    using std::domain_error::domain_error;
};

/// Iterative method exceeded its iteration cap.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Random sampler kept drawing degenerate (all-zero) vectors.
struct DegenerateDraw : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace csforge

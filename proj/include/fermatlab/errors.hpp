#pragma once

#include <stdexcept>
#include <string>

namespace fermatlab {

/// Bad arguments: degenerate polynomial, malformed literal, unknown case id.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction hypothesis such as ρ² ≠ 1 or τ³ ≠ −1 does not hold.
struct HypothesisViolation : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// Iteration failed to converge or produced a non-finite value.
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vanishing modular discriminant.
struct DegenerateLattice : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation point lies on (or within the hard radius of) a lattice pole.
struct PoleProximity : std::domain_error {
    using std::domain_error::domain_error;
};

/// An exact (rational-complex) computation met an irrational constant.
struct NotExact : std::domain_error {
    using std::domain_error::domain_error;
};

/// Zero-set analyzer could not produce a self-consistent answer.
struct AnalyzerFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fermatlab

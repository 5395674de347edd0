//! Stirling functions of the second kind for a complex argument, the exact
//! combinatorial kernels around them (binomial coefficients, both Stirling
//! triangles, Eulerian polynomials, harmonic numbers), the binomial
//! transform, and an engine that checks a catalog of power-sum identities in
//! two arithmetic regimes:
//!
//! * exact — arbitrary-precision rationals, equality is exact;
//! * float — complex binary64, either with compensated accumulation
//!   (standard) or in pair arithmetic (extended).
//!
//! Everything is a pure function over immutable inputs and safe to call
//! concurrently.

pub mod dd;
pub mod error;
pub mod exact;
pub mod identity;
pub mod scalar;
pub mod stirling;
pub mod sums;
pub mod transform;
pub mod verify;

/// Arbitrary-precision non-negative integer: binomials, Stirling numbers,
/// Eulerian coefficients.
pub type BigCardinal = num_bigint::BigUint;
/// Arbitrary-precision rational, always reduced with positive denominator.
pub type ExactRational = num_rational::BigRational;
/// Complex floating-point value with binary64 components.
pub type ComplexScalar = num_complex::Complex64;

pub use dd::{ComplexDd, DoubleDouble};
pub use error::{Error, Result};
pub use exact::{
    binomial, eulerian_polynomial, factorial, harmonic, stirling1_unsigned, stirling2_exact,
    EulerianPolynomial,
};
pub use identity::{
    binomial_power_sum_closed, binomial_power_sum_difference_form, coefficient_sum_closed,
    coefficient_sum_direct, eulerian_power_sum_closed, first_kind_power_sum_closed,
    harmonic_power_sum_closed, power_sum_closed, power_sum_direct,
    tail_reciprocal_power_sum_closed, unit_power_sum_closed, UnitSumForm, WeightKind,
    DEFAULT_SINGULAR_GUARD,
};
pub use scalar::{accumulate, Accumulator, PowerScalar, Scalar};
pub use stirling::{
    stirling_function, stirling_function_exact, stirling_weight, EvalContext, Precision,
};
pub use sums::{
    sigma_polynomial, sigma_polynomial_factored, upper_sum_binomial, upper_sum_harmonic,
    upper_sum_reciprocal, upper_sum_stirling1, weighted_binomial_sum_closed,
};
pub use transform::{binomial_transform, binomial_transform_inverse, Sequence};
pub use verify::{
    verify_identity, ArithmeticMode, ExponentValue, IdentityId, IdentityParams, IdentityReport,
    ReportValue, ScalarValue, NEAR_ZERO_LHS,
};

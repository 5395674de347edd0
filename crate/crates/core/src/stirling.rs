//! Stirling functions of the second kind for a complex (or integer) argument:
//! S(alpha, k) = (1/k!) Σ_{j=1}^{k} (−1)^{k−j} C(k,j) j^alpha.
//!
//! j^alpha means exp(alpha·ln j) with the real logarithm of the positive
//! integer j, so no branch ambiguity arises. The sum is alternating and its
//! condition number grows with k when |alpha| is small; the standard mode
//! compensates the accumulation and the extended mode evaluates every term in
//! pair arithmetic.
//!
//! alpha = 0 is accepted and evaluates cleanly, although the defining
//! references exclude it; callers wanting the classical restriction can
//! reject it themselves.

use crate::dd::ComplexDd;
use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::scalar::{Accumulator, PowerScalar, Scalar};
use crate::{ComplexScalar, ExactRational};

/// Floating-point precision regime for complex evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// binary64 components with compensated accumulation.
    #[default]
    Standard,
    /// pair-arithmetic components (roughly twice the significand).
    Extended,
}

/// Immutable evaluation context; pass by reference, never ambient state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalContext {
    pub precision: Precision,
}

impl EvalContext {
    pub fn standard() -> Self {
        Self {
            precision: Precision::Standard,
        }
    }
    pub fn extended() -> Self {
        Self {
            precision: Precision::Extended,
        }
    }
}

/// k!·S(alpha, k): the binomial transform of the power sequence, i.e.
/// Σ_{j=1}^{k} (−1)^{k−j} C(k,j) j^alpha, in the scalar's own regime.
pub fn stirling_weight<S: PowerScalar>(alpha: &S::Exponent, k: u32) -> S {
    let mut acc = S::Acc::default();
    for j in 1..=k {
        let mut term = S::from_cardinal(&crate::exact::binomial(k, j)) * S::int_power(j, alpha);
        if (k - j) % 2 == 1 {
            term = -term;
        }
        acc.push(term);
    }
    acc.finish()
}

/// S(alpha, k) for complex alpha, in the context's precision.
///
/// Errors with [`Error::NonFinite`] when the evaluation overflows, e.g. when
/// |Re alpha|·ln k exceeds the exponent range.
pub fn stirling_function(alpha: ComplexScalar, k: u32, ctx: &EvalContext) -> Result<ComplexScalar> {
    assert!(k >= 1, "stirling_function: k must be >= 1");
    let value = match ctx.precision {
        Precision::Standard => {
            let w: ComplexScalar = stirling_weight(&alpha, k);
            w / <ComplexScalar as Scalar>::from_cardinal(&factorial(k))
        }
        Precision::Extended => {
            let a = ComplexDd::from_complex(alpha);
            let w: ComplexDd = stirling_weight(&a, k);
            (w / <ComplexDd as Scalar>::from_cardinal(&factorial(k))).to_complex()
        }
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite)
    }
}

/// S(n, k) for integer n, as an exact rational. Coincides with the classical
/// second-kind Stirling number for n ≥ k ≥ 1 and vanishes for 1 ≤ n < k;
/// negative n gives the exact reciprocal-power values.
pub fn stirling_function_exact(alpha: i64, k: u32) -> ExactRational {
    assert!(k >= 1, "stirling_function_exact: k must be >= 1");
    let w: ExactRational = stirling_weight(&alpha, k);
    w / <ExactRational as Scalar>::from_cardinal(&factorial(k))
}

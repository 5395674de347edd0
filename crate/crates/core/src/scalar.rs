//! The abstract scalar domain shared by the exact-rational and the two
//! complex floating-point regimes. Transform, summation and identity code is
//! written once against [`Scalar`]/[`PowerScalar`] and instantiated per mode.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use crate::dd::{ComplexDd, DoubleDouble};
use crate::{BigCardinal, ComplexScalar, ExactRational};

/// Summation strategy for a scalar type. The exact and pair-arithmetic
/// regimes sum plainly; the plain f64 regime compensates.
pub trait Accumulator<S>: Default {
    fn push(&mut self, term: S);
    fn finish(self) -> S;
}

/// Scalar operations needed by the transforms and identity evaluators.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Acc: Accumulator<Self>;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_cardinal(v: &BigCardinal) -> Self;
    fn from_rational(v: &ExactRational) -> Self;
    /// Integer power; negative exponents require a nonzero base.
    fn powi(&self, k: i32) -> Self;
    fn is_zero(&self) -> bool;
    /// Exact types are always finite; float types check both components.
    fn is_finite(&self) -> bool;
    /// Magnitude as f64, for tolerance decisions and singularity guards.
    fn magnitude(&self) -> f64;
}

/// Scalars that can raise a positive integer base to the regime's exponent
/// type: an integer in the exact regime, a complex value in the float
/// regimes (where k^alpha = exp(alpha·ln k) with the real logarithm).
pub trait PowerScalar: Scalar {
    type Exponent: Clone + Debug + PartialEq;

    fn int_power(base: u32, exponent: &Self::Exponent) -> Self;
    fn exponent_plus(e: &Self::Exponent, delta: i64) -> Self::Exponent;
    fn exponent_neg(e: &Self::Exponent) -> Self::Exponent;
}

/// Plain left-to-right summation.
pub struct PlainSum<S: Scalar>(S);

impl<S: Scalar> Default for PlainSum<S> {
    fn default() -> Self {
        Self(S::zero())
    }
}

impl<S: Scalar> Accumulator<S> for PlainSum<S> {
    #[inline]
    fn push(&mut self, term: S) {
        self.0 = self.0.clone() + term;
    }
    fn finish(self) -> S {
        self.0
    }
}

/// Neumaier-compensated summation, applied per component. The compensation
/// term also absorbs the case where the incoming term dominates the running
/// sum, which plain Kahan loses.
#[derive(Default)]
pub struct CompensatedComplexSum {
    sum: ComplexScalar,
    comp: ComplexScalar,
}

#[inline]
fn neumaier_step(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl Accumulator<ComplexScalar> for CompensatedComplexSum {
    #[inline]
    fn push(&mut self, term: ComplexScalar) {
        neumaier_step(&mut self.sum.re, &mut self.comp.re, term.re);
        neumaier_step(&mut self.sum.im, &mut self.comp.im, term.im);
    }
    fn finish(self) -> ComplexScalar {
        self.sum + self.comp
    }
}

impl Scalar for ExactRational {
    type Acc = PlainSum<Self>;

    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_int(v: i64) -> Self {
        ExactRational::from_integer(BigInt::from(v))
    }
    fn from_cardinal(v: &BigCardinal) -> Self {
        ExactRational::from_integer(BigInt::from(v.clone()))
    }
    fn from_rational(v: &ExactRational) -> Self {
        v.clone()
    }
    fn powi(&self, k: i32) -> Self {
        Pow::pow(self, k)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_finite(&self) -> bool {
        true
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl PowerScalar for ExactRational {
    type Exponent = i64;

    fn int_power(base: u32, exponent: &i64) -> Self {
        let p = BigInt::from(base).pow(exponent.unsigned_abs() as u32);
        let p = ExactRational::from_integer(p);
        if *exponent >= 0 {
            p
        } else {
            p.recip()
        }
    }
    fn exponent_plus(e: &i64, delta: i64) -> i64 {
        e + delta
    }
    fn exponent_neg(e: &i64) -> i64 {
        -e
    }
}

impl Scalar for ComplexScalar {
    type Acc = CompensatedComplexSum;

    fn zero() -> Self {
        ComplexScalar::new(0.0, 0.0)
    }
    fn one() -> Self {
        ComplexScalar::new(1.0, 0.0)
    }
    fn from_int(v: i64) -> Self {
        ComplexScalar::new(v as f64, 0.0)
    }
    fn from_cardinal(v: &BigCardinal) -> Self {
        ComplexScalar::new(v.to_f64().unwrap_or(f64::INFINITY), 0.0)
    }
    fn from_rational(v: &ExactRational) -> Self {
        ComplexScalar::new(v.to_f64().unwrap_or(f64::INFINITY), 0.0)
    }
    fn powi(&self, k: i32) -> Self {
        num_complex::Complex64::powi(self, k)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl PowerScalar for ComplexScalar {
    type Exponent = ComplexScalar;

    fn int_power(base: u32, exponent: &ComplexScalar) -> Self {
        if base == 1 {
            return Self::one(); // ln 1 = 0 exactly
        }
        (exponent * (f64::from(base)).ln()).exp()
    }
    fn exponent_plus(e: &ComplexScalar, delta: i64) -> ComplexScalar {
        ComplexScalar::new(e.re + delta as f64, e.im)
    }
    fn exponent_neg(e: &ComplexScalar) -> ComplexScalar {
        -e
    }
}

impl Scalar for ComplexDd {
    type Acc = PlainSum<Self>;

    fn zero() -> Self {
        ComplexDd::ZERO
    }
    fn one() -> Self {
        ComplexDd::ONE
    }
    fn from_int(v: i64) -> Self {
        // i64 may exceed the 53-bit window; split into two words
        let hi = v as f64;
        let lo = (v - hi as i64) as f64;
        ComplexDd::new(DoubleDouble::new(hi, lo), DoubleDouble::ZERO)
    }
    fn from_cardinal(v: &BigCardinal) -> Self {
        ComplexDd::new(cardinal_to_dd(v), DoubleDouble::ZERO)
    }
    fn from_rational(v: &ExactRational) -> Self {
        let numer = bigint_to_dd(v.numer());
        let denom = bigint_to_dd(v.denom());
        ComplexDd::new(numer / denom, DoubleDouble::ZERO)
    }
    fn powi(&self, k: i32) -> Self {
        ComplexDd::powi(*self, k)
    }
    fn is_zero(&self) -> bool {
        self.re == DoubleDouble::ZERO && self.im == DoubleDouble::ZERO
    }
    fn is_finite(&self) -> bool {
        ComplexDd::is_finite(*self)
    }
    fn magnitude(&self) -> f64 {
        ComplexDd::magnitude(*self)
    }
}

impl PowerScalar for ComplexDd {
    type Exponent = ComplexDd;

    fn int_power(base: u32, exponent: &ComplexDd) -> Self {
        if base == 1 {
            return Self::one();
        }
        let ln_base = DoubleDouble::from_f64(f64::from(base)).ln();
        let w = ComplexDd::new(exponent.re * ln_base, exponent.im * ln_base);
        w.exp()
    }
    fn exponent_plus(e: &ComplexDd, delta: i64) -> ComplexDd {
        ComplexDd::new(e.re + DoubleDouble::from_f64(delta as f64), e.im)
    }
    fn exponent_neg(e: &ComplexDd) -> ComplexDd {
        -*e
    }
}

/// Arbitrary-precision magnitude folded into a pair of f64 words. Values in
/// this crate stay far below the 106-bit window, so the fold is exact.
fn cardinal_to_dd(v: &BigCardinal) -> DoubleDouble {
    let hi = v.to_f64().unwrap_or(f64::INFINITY);
    if !hi.is_finite() {
        return DoubleDouble::from_f64(hi);
    }
    // residual after removing the leading word
    let approx = BigInt::from(hi as i128);
    let rest = BigInt::from(v.clone()) - approx;
    DoubleDouble::new(hi, rest.to_f64().unwrap_or(0.0))
}

fn bigint_to_dd(v: &BigInt) -> DoubleDouble {
    let hi = v.to_f64().unwrap_or(f64::INFINITY);
    if !hi.is_finite() {
        return DoubleDouble::from_f64(hi);
    }
    let rest = v - BigInt::from(hi as i128);
    DoubleDouble::new(hi, rest.to_f64().unwrap_or(0.0))
}

/// Sum an iterator with the scalar's own accumulation strategy.
pub fn accumulate<S: Scalar>(terms: impl IntoIterator<Item = S>) -> S {
    let mut acc = S::Acc::default();
    for t in terms {
        acc.push(t);
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn compensated_sum_beats_naive_on_cancellation() {
        // alternating large/small terms that cancel to 2.0
        let terms: Vec<ComplexScalar> = (0..100)
            .flat_map(|_| {
                [
                    ComplexScalar::new(1e16, 0.0),
                    ComplexScalar::new(0.01, 0.0),
                    ComplexScalar::new(-1e16, 0.0),
                    ComplexScalar::new(0.01, 0.0),
                ]
            })
            .collect();
        let compensated = accumulate::<ComplexScalar>(terms.iter().cloned());
        assert!(
            (compensated.re - 2.0).abs() < 1e-12,
            "got {}",
            compensated.re
        );
    }

    #[test]
    fn rational_int_power_handles_negative_exponents() {
        let v = <ExactRational as PowerScalar>::int_power(2, &-3);
        assert_eq!(v, ExactRational::new(BigInt::from(1), BigInt::from(8)));
        let w = <ExactRational as PowerScalar>::int_power(3, &0);
        assert_eq!(w, <ExactRational as Scalar>::one());
    }

    #[test]
    fn complex_int_power_matches_exact_for_integers() {
        for n in 1..=6i64 {
            for base in 1..=9u32 {
                let exact = <ExactRational as PowerScalar>::int_power(base, &n);
                let float = <ComplexScalar as PowerScalar>::int_power(
                    base,
                    &ComplexScalar::new(n as f64, 0.0),
                );
                let want = exact.to_f64().unwrap();
                assert!(
                    (float.re - want).abs() <= 1e-12 * want && float.im.abs() <= 1e-12 * want,
                    "{base}^{n}: got {float}, want {want}"
                );
            }
        }
    }

    #[test]
    fn dd_int_power_refines_f64_path() {
        let alpha = ComplexScalar::new(0.5, -1.25);
        let std = <ComplexScalar as PowerScalar>::int_power(7, &alpha);
        let ext = <ComplexDd as PowerScalar>::int_power(7, &ComplexDd::from_complex(alpha));
        assert!((ext.to_complex() - std).norm() <= 1e-14 * std.norm());
    }

    #[test]
    fn cardinal_conversion_is_two_word_exact() {
        // 2^80 + 3 cannot be represented in one f64 word
        let v = (BigUint::from(1u8) << 80) + BigUint::from(3u8);
        let dd = cardinal_to_dd(&v);
        assert_eq!(dd.hi, 2f64.powi(80));
        assert_eq!(dd.lo, 3.0);
    }
}

//! Power-sum identity machinery: the direct-summation left-hand sides and the
//! closed-form right-hand sides for every identity in the catalog, written
//! once over the abstract scalar domain.
//!
//! All closed forms expand the weighted power sum through the coefficient
//! sum: Σ_{k=1}^{m} k^alpha c_k = Σ_{j=1}^{m} j!·S(alpha,j)·Σ_{k=j}^{m} C(k,j)·c_k,
//! specialised by plugging each weight's upper-summation closed form into the
//! inner sum.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial, eulerian_polynomial, harmonic, stirling1_unsigned};
use crate::scalar::{Accumulator, PowerScalar, Scalar};
use crate::stirling::stirling_weight;
use crate::sums::{
    sigma_polynomial, upper_sum_harmonic, upper_sum_reciprocal, upper_sum_stirling1,
};
use crate::{BigCardinal, ExactRational};

/// Term weight of the universal direct power sum Σ w_k · k^alpha · x^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// w_k = 1
    Unit,
    /// w_k = C(m, k)
    Binomial,
    /// w_k = c(m, k), unsigned first-kind Stirling numbers
    FirstKindCycles,
    /// w_k = H_k
    Harmonic,
    /// w_k = 1/(m − k + 1)
    TailReciprocal,
}

/// Guard radius around the excluded points of the closed forms that divide by
/// 1−x or 1+x; floating-point evaluation inside it reports a singularity
/// instead of returning amplified noise. Exact evaluation only rejects the
/// point itself (pass 0.0).
pub const DEFAULT_SINGULAR_GUARD: f64 = 1e-6;

fn finite<S: Scalar>(v: S) -> Result<S> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite)
    }
}

/// The universal left-hand side: Σ_{k=1}^{m} w_k · k^alpha · x^k by direct
/// term-by-term summation. Exact when the inputs are exact.
pub fn power_sum_direct<S: PowerScalar>(
    alpha: &S::Exponent,
    x: &S,
    weight: WeightKind,
    m: u32,
) -> Result<S> {
    assert!(m >= 1, "power_sum_direct: m must be >= 1");
    let mut acc = S::Acc::default();
    for k in 1..=m {
        let w = match weight {
            WeightKind::Unit => S::one(),
            WeightKind::Binomial => S::from_cardinal(&binomial(m, k)),
            WeightKind::FirstKindCycles => S::from_cardinal(&stirling1_unsigned(m, k)),
            WeightKind::Harmonic => S::from_rational(&harmonic(k)),
            WeightKind::TailReciprocal => {
                S::from_rational(&ExactRational::new(BigInt::one(), BigInt::from(m - k + 1)))
            }
        };
        acc.push(w * S::int_power(k, alpha) * x.powi(k as i32));
    }
    finite(acc.finish())
}

/// Coefficient-weighted power sum Σ_{k=1}^{m} k^alpha c_k, summed directly.
pub fn coefficient_sum_direct<S: PowerScalar>(
    coeffs: &[S],
    alpha: &S::Exponent,
    m: u32,
) -> Result<S> {
    assert!(
        coeffs.len() >= m as usize,
        "coefficient_sum_direct: need at least m coefficients"
    );
    let mut acc = S::Acc::default();
    for k in 1..=m {
        acc.push(S::int_power(k, alpha) * coeffs[k as usize - 1].clone());
    }
    finite(acc.finish())
}

/// The expanded form of the coefficient-weighted power sum:
/// Σ_{j=1}^{m} j!·S(alpha,j)·Σ_{k=j}^{m} C(k,j)·c_k.
pub fn coefficient_sum_closed<S: PowerScalar>(
    coeffs: &[S],
    alpha: &S::Exponent,
    m: u32,
) -> Result<S> {
    assert!(
        coeffs.len() >= m as usize,
        "coefficient_sum_closed: need at least m coefficients"
    );
    let mut acc = S::Acc::default();
    for j in 1..=m {
        let mut inner = S::Acc::default();
        for k in j..=m {
            inner.push(S::from_cardinal(&binomial(k, j)) * coeffs[k as usize - 1].clone());
        }
        acc.push(stirling_weight::<S>(alpha, j) * inner.finish());
    }
    finite(acc.finish())
}

/// Closed form of Σ k^alpha x^k: Σ_{j=1}^{m} j!·S(alpha,j)·σ(x, m, j).
pub fn power_sum_closed<S: PowerScalar>(alpha: &S::Exponent, x: &S, m: u32) -> Result<S> {
    assert!(m >= 1);
    let mut acc = S::Acc::default();
    for j in 1..=m {
        acc.push(stirling_weight::<S>(alpha, j) * sigma_polynomial(x, m, j));
    }
    finite(acc.finish())
}

/// The two closed forms of the plain power sum Σ_{k=1}^{m} k^alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSumForm {
    /// Σ_j C(m+1, j+1)·j!·S(alpha, j)
    UpperBinomial,
    /// Σ_j C(m, j)·(j−1)!·S(alpha+1, j), the index-shifted equivalent
    IndexShifted,
}

pub fn unit_power_sum_closed<S: PowerScalar>(
    alpha: &S::Exponent,
    m: u32,
    form: UnitSumForm,
) -> Result<S> {
    assert!(m >= 1);
    let mut acc = S::Acc::default();
    match form {
        UnitSumForm::UpperBinomial => {
            for j in 1..=m {
                acc.push(
                    S::from_cardinal(&binomial(m + 1, j + 1)) * stirling_weight::<S>(alpha, j),
                );
            }
        }
        UnitSumForm::IndexShifted => {
            let up = S::exponent_plus(alpha, 1);
            for j in 1..=m {
                // (j−1)!·S(alpha+1, j) = j!·S(alpha+1, j)/j
                acc.push(
                    S::from_cardinal(&binomial(m, j)) * stirling_weight::<S>(&up, j)
                        / S::from_int(i64::from(j)),
                );
            }
        }
    }
    finite(acc.finish())
}

/// Closed form of Σ_{k=1}^{m} k^n x^k through the Eulerian polynomials:
/// A_n(x)/(1−x)^{n+1} − x^{m+1} Σ_{k=0}^{n} C(n,k)(m+1)^{n−k} A_k(x)/(1−x)^{k+1},
/// adjusted at n = 0 where the raw form carries the k = 0 geometric term.
///
/// Only genuine non-negative integer exponents make sense here: n bounds the
/// correction sum.
pub fn eulerian_power_sum_closed<S: Scalar>(n: u32, x: &S, m: u32, guard: f64) -> Result<S> {
    assert!(m >= 1);
    let one_minus_x = S::one() - x.clone();
    if one_minus_x.is_zero() || one_minus_x.magnitude() < guard {
        return Err(Error::SingularPoint("x=1"));
    }
    let polys: Vec<Vec<BigCardinal>> = (0..=n)
        .map(|k| eulerian_polynomial(k).coefficients().to_vec())
        .collect();
    let lead = eval_cardinal_poly(&polys[n as usize], x) * one_minus_x.powi(-(n as i32 + 1));
    let mut acc = S::Acc::default();
    for k in 0..=n {
        let shift = BigCardinal::from(m + 1).pow(n - k);
        acc.push(
            S::from_cardinal(&(binomial(n, k) * shift))
                * eval_cardinal_poly(&polys[k as usize], x)
                * one_minus_x.powi(-(k as i32 + 1)),
        );
    }
    let mut value = lead - x.powi(m as i32 + 1) * acc.finish();
    if n == 0 {
        // the Eulerian form sums from k = 0; drop the constant 0^0·x^0 term
        value = value - S::one();
    }
    finite(value)
}

/// Closed form of the binomially weighted sum Σ C(m,k) k^alpha x^k:
/// Σ_{j=1}^{m} C(m,j)·j!·S(alpha,j)·x^j·(1+x)^{m−j}.
pub fn binomial_power_sum_closed<S: PowerScalar>(alpha: &S::Exponent, x: &S, m: u32) -> Result<S> {
    assert!(m >= 1);
    let one_plus_x = S::one() + x.clone();
    let mut acc = S::Acc::default();
    for j in 1..=m {
        acc.push(
            S::from_cardinal(&binomial(m, j))
                * stirling_weight::<S>(alpha, j)
                * x.powi(j as i32)
                * one_plus_x.powi((m - j) as i32),
        );
    }
    finite(acc.finish())
}

/// The iterated-difference closed form of Σ_{k=1}^{n} C(n,k) k^r x^k:
/// (1+x)^n Σ_{j=0}^{r} (−1)^j C(n,j) (x/(1+x))^j Σ_{k=0}^{j} (−1)^k C(j,k) k^r.
///
/// r must be a genuine positive integer; it bounds the outer sum.
pub fn binomial_power_sum_difference_form<S: Scalar>(
    r: u32,
    x: &S,
    n: u32,
    guard: f64,
) -> Result<S> {
    assert!(r >= 1, "binomial_power_sum_difference_form: r must be >= 1");
    assert!(n >= 1);
    let one_plus_x = S::one() + x.clone();
    if one_plus_x.is_zero() || one_plus_x.magnitude() < guard {
        return Err(Error::SingularPoint("x=-1"));
    }
    let ratio = x.clone() / one_plus_x.clone();
    let mut acc = S::Acc::default();
    // the j = 0 term vanishes: its inner sum is 0^r with r >= 1
    for j in 1..=r {
        let mut inner = S::Acc::default();
        for k in 1..=j {
            let mut t =
                S::from_cardinal(&binomial(j, k)) * S::from_int(i64::from(k)).powi(r as i32);
            if k % 2 == 1 {
                t = -t;
            }
            inner.push(t);
        }
        let mut term = S::from_cardinal(&binomial(n, j)) * ratio.powi(j as i32) * inner.finish();
        if j % 2 == 1 {
            term = -term;
        }
        acc.push(term);
    }
    finite(one_plus_x.powi(n as i32) * acc.finish())
}

/// Closed form of Σ c(m,k) k^alpha: Σ_{j=1}^{m} j!·S(alpha,j)·c(m+1, j+1).
pub fn first_kind_power_sum_closed<S: PowerScalar>(alpha: &S::Exponent, m: u32) -> Result<S> {
    assert!(m >= 1);
    let mut acc = S::Acc::default();
    for j in 1..=m {
        acc.push(S::from_cardinal(&upper_sum_stirling1(m, j)) * stirling_weight::<S>(alpha, j));
    }
    finite(acc.finish())
}

/// Closed form of Σ H_k k^alpha:
/// Σ_{j=1}^{m} j!·S(alpha,j)·C(m+1,j+1)·(H_{m+1} − 1/(j+1)).
pub fn harmonic_power_sum_closed<S: PowerScalar>(alpha: &S::Exponent, m: u32) -> Result<S> {
    assert!(m >= 1);
    let mut acc = S::Acc::default();
    for j in 1..=m {
        acc.push(S::from_rational(&upper_sum_harmonic(m, j)) * stirling_weight::<S>(alpha, j));
    }
    finite(acc.finish())
}

/// Closed form of Σ k^alpha/(m−k+1):
/// Σ_{j=1}^{m} j!·S(alpha,j)·C(m+1,j)·(H_{m+1} − H_j).
pub fn tail_reciprocal_power_sum_closed<S: PowerScalar>(alpha: &S::Exponent, m: u32) -> Result<S> {
    assert!(m >= 1);
    let mut acc = S::Acc::default();
    for j in 1..=m {
        acc.push(S::from_rational(&upper_sum_reciprocal(m, j)) * stirling_weight::<S>(alpha, j));
    }
    finite(acc.finish())
}

/// Horner evaluation of a polynomial with cardinal coefficients.
pub(crate) fn eval_cardinal_poly<S: Scalar>(coeffs: &[BigCardinal], x: &S) -> S {
    coeffs
        .iter()
        .rev()
        .fold(S::zero(), |acc, c| acc * x.clone() + S::from_cardinal(c))
}

//! The binomial transform pair. Slices stand in for sequences indexed from 1:
//! `a[0]` holds the first entry a_1.

use crate::scalar::{Accumulator, Scalar};
use crate::{ComplexScalar, ExactRational};

/// A concrete sequence in one of the two arithmetic regimes, first entry at
/// logical index 1. Used at API boundaries (identity coefficients, CLI).
#[derive(Debug, Clone, PartialEq)]
pub enum Sequence {
    Rational(Vec<ExactRational>),
    Complex(Vec<ComplexScalar>),
}

impl Sequence {
    pub fn len(&self) -> usize {
        match self {
            Sequence::Rational(v) => v.len(),
            Sequence::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// b_k = Σ_{j=1}^{k} (−1)^{k−j} C(k,j) a_j for every k up to the input length.
pub fn binomial_transform<S: Scalar>(a: &[S]) -> Vec<S> {
    (1..=a.len() as u32)
        .map(|k| {
            let mut acc = S::Acc::default();
            for j in 1..=k {
                let mut term =
                    S::from_cardinal(&crate::exact::binomial(k, j)) * a[j as usize - 1].clone();
                if (k - j) % 2 == 1 {
                    term = -term;
                }
                acc.push(term);
            }
            acc.finish()
        })
        .collect()
}

/// Inverse transform a_k = Σ_{j=1}^{k} C(k,j) b_j; round-trips with
/// [`binomial_transform`].
pub fn binomial_transform_inverse<S: Scalar>(b: &[S]) -> Vec<S> {
    (1..=b.len() as u32)
        .map(|k| {
            let mut acc = S::Acc::default();
            for j in 1..=k {
                acc.push(
                    S::from_cardinal(&crate::exact::binomial(k, j)) * b[j as usize - 1].clone(),
                );
            }
            acc.finish()
        })
        .collect()
}

//! Upper summation kernels: sums over the upper index of a binomial
//! coefficient and their closed forms. The closed forms are what the identity
//! engine consumes; the direct summations live in the tests as oracles.

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{binomial, harmonic, stirling1_unsigned};
use crate::scalar::{Accumulator, Scalar};
use crate::{BigCardinal, ExactRational};

/// The upper summation polynomial σ(x, m, j) = Σ_{k=j}^{m} C(k,j) x^k.
pub fn sigma_polynomial<S: Scalar>(x: &S, m: u32, j: u32) -> S {
    assert!(1 <= j && j <= m, "sigma_polynomial: need 1 <= j <= m");
    let mut acc = S::Acc::default();
    for k in j..=m {
        acc.push(S::from_cardinal(&binomial(k, j)) * x.powi(k as i32));
    }
    acc.finish()
}

/// σ(x, m, j) in its factored form x^j Σ_{r=0}^{m−j} C(r+j, j) x^r.
/// Agrees with [`sigma_polynomial`]; kept public so the agreement is
/// checkable from outside.
pub fn sigma_polynomial_factored<S: Scalar>(x: &S, m: u32, j: u32) -> S {
    assert!(
        1 <= j && j <= m,
        "sigma_polynomial_factored: need 1 <= j <= m"
    );
    let mut acc = S::Acc::default();
    for r in 0..=m - j {
        acc.push(S::from_cardinal(&binomial(r + j, j)) * x.powi(r as i32));
    }
    x.powi(j as i32) * acc.finish()
}

/// Σ_{k=j}^{m} C(k,j) in closed form: C(m+1, j+1).
pub fn upper_sum_binomial(m: u32, j: u32) -> BigCardinal {
    assert!(1 <= j && j <= m, "upper_sum_binomial: need 1 <= j <= m");
    binomial(m + 1, j + 1)
}

/// Σ_{k=j}^{m} C(m,k) C(k,j) x^k in closed form: C(m,j)·x^j·(1+x)^{m−j}.
pub fn weighted_binomial_sum_closed<S: Scalar>(x: &S, m: u32, j: u32) -> S {
    assert!(
        1 <= j && j <= m,
        "weighted_binomial_sum_closed: need 1 <= j <= m"
    );
    S::from_cardinal(&binomial(m, j))
        * x.powi(j as i32)
        * (S::one() + x.clone()).powi((m - j) as i32)
}

/// Σ_{k=j}^{m} C(k,j) c(m,k) in closed form: c(m+1, j+1), with c the unsigned
/// first-kind Stirling number.
pub fn upper_sum_stirling1(m: u32, j: u32) -> BigCardinal {
    assert!(1 <= j && j <= m, "upper_sum_stirling1: need 1 <= j <= m");
    stirling1_unsigned(m + 1, j + 1)
}

/// Σ_{k=j}^{m} C(k,j) H_k in closed form: C(m+1, j+1)·(H_{m+1} − 1/(j+1)).
pub fn upper_sum_harmonic(m: u32, j: u32) -> ExactRational {
    assert!(1 <= j && j <= m, "upper_sum_harmonic: need 1 <= j <= m");
    let front = ExactRational::from_integer(BigInt::from(binomial(m + 1, j + 1)));
    front * (harmonic(m + 1) - ExactRational::new(BigInt::one(), BigInt::from(j + 1)))
}

/// Σ_{k=j}^{m} C(k,j)/(m−k+1) in closed form: C(m+1, j)·(H_{m+1} − H_j).
pub fn upper_sum_reciprocal(m: u32, j: u32) -> ExactRational {
    assert!(1 <= j && j <= m, "upper_sum_reciprocal: need 1 <= j <= m");
    let front = ExactRational::from_integer(BigInt::from(binomial(m + 1, j)));
    front * (harmonic(m + 1) - harmonic(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::accumulate;
    use crate::ComplexScalar;

    fn ratio(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(n: i64) -> ExactRational {
        ExactRational::from_integer(BigInt::from(n))
    }

    // Direct-summation oracles, independent of the closed forms above.

    fn direct_upper_binomial(m: u32, j: u32) -> BigCardinal {
        (j..=m).map(|k| binomial(k, j)).sum()
    }

    fn direct_weighted_binomial(x: &ExactRational, m: u32, j: u32) -> ExactRational {
        accumulate((j..=m).map(|k| {
            <ExactRational as Scalar>::from_cardinal(&(binomial(m, k) * binomial(k, j)))
                * x.powi(k as i32)
        }))
    }

    fn direct_upper_stirling1(m: u32, j: u32) -> BigCardinal {
        (j..=m)
            .map(|k| binomial(k, j) * stirling1_unsigned(m, k))
            .sum()
    }

    fn direct_upper_harmonic(m: u32, j: u32) -> ExactRational {
        accumulate(
            (j..=m)
                .map(|k| <ExactRational as Scalar>::from_cardinal(&binomial(k, j)) * harmonic(k)),
        )
    }

    fn direct_upper_reciprocal(m: u32, j: u32) -> ExactRational {
        accumulate((j..=m).map(|k| {
            <ExactRational as Scalar>::from_cardinal(&binomial(k, j))
                * ExactRational::new(BigInt::one(), BigInt::from(m - k + 1))
        }))
    }

    #[test]
    fn sigma_polynomial_examples() {
        // 1·2 + 2·4 + 3·8 = 34
        assert_eq!(sigma_polynomial(&int(2), 3, 1), int(34));
        // single term C(m,m)·x^m
        for m in 1..=6 {
            assert_eq!(sigma_polynomial(&int(3), m, m), int(3).powi(m as i32));
        }
        // at x = 1 the polynomial collapses to the plain upper sum
        for m in 1..=12 {
            for j in 1..=m {
                let at_one = sigma_polynomial(&int(1), m, j);
                let want = <ExactRational as Scalar>::from_cardinal(&binomial(m + 1, j + 1));
                assert_eq!(at_one, want, "sigma(1,{m},{j})");
            }
        }
    }

    #[test]
    fn sigma_polynomial_forms_agree_exactly() {
        for x in [int(2), int(-2), ratio(1, 2), ratio(-1, 3)] {
            for m in 1..=20 {
                for j in 1..=m {
                    assert_eq!(
                        sigma_polynomial(&x, m, j),
                        sigma_polynomial_factored(&x, m, j),
                        "x={x} m={m} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn sigma_polynomial_forms_agree_complex() {
        let x = ComplexScalar::new(-0.8, 1.7);
        for m in 1..=20 {
            for j in 1..=m {
                let a = sigma_polynomial(&x, m, j);
                let b = sigma_polynomial_factored(&x, m, j);
                assert!(
                    (a - b).norm() <= 1e-12 * a.norm().max(1.0),
                    "m={m} j={j}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn upper_sum_binomial_matches_direct() {
        assert_eq!(upper_sum_binomial(3, 1), BigCardinal::from(6u32));
        assert_eq!(upper_sum_binomial(5, 2), BigCardinal::from(20u32));
        for m in 1..=30 {
            assert_eq!(upper_sum_binomial(m, m), BigCardinal::one());
            for j in 1..=m {
                assert_eq!(
                    upper_sum_binomial(m, j),
                    direct_upper_binomial(m, j),
                    "({m},{j})"
                );
            }
        }
    }

    #[test]
    fn weighted_binomial_sum_matches_direct() {
        // 6 + 24 + 24 = 54 = 3·2·9
        assert_eq!(weighted_binomial_sum_closed(&int(2), 3, 1), int(54));
        // j = m collapses both sides to x^m
        assert_eq!(weighted_binomial_sum_closed(&int(5), 4, 4), int(625));
        // the (1+x)^{m−j} factor vanishes at x = −1 when m > j
        assert_eq!(weighted_binomial_sum_closed(&int(-1), 3, 1), int(0));
        for x in [int(2), int(-2), ratio(1, 2)] {
            for m in 1..=20 {
                for j in 1..=m {
                    assert_eq!(
                        weighted_binomial_sum_closed(&x, m, j),
                        direct_weighted_binomial(&x, m, j),
                        "x={x} m={m} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn upper_sum_stirling1_matches_direct() {
        assert_eq!(upper_sum_stirling1(3, 1), BigCardinal::from(11u32));
        assert_eq!(upper_sum_stirling1(4, 2), BigCardinal::from(35u32));
        for m in 1..=20 {
            assert_eq!(upper_sum_stirling1(m, m), BigCardinal::one());
            for j in 1..=m {
                assert_eq!(
                    upper_sum_stirling1(m, j),
                    direct_upper_stirling1(m, j),
                    "({m},{j})"
                );
            }
        }
    }

    #[test]
    fn upper_sum_harmonic_matches_direct() {
        // 1·1 + 2·(3/2) = 4 = 3·(11/6 − 1/2)
        assert_eq!(upper_sum_harmonic(2, 1), int(4));
        // frozen from the direct oracle: C(2,2)H_2 + C(3,2)H_3 = 3/2 + 11/2 = 7
        assert_eq!(direct_upper_harmonic(3, 2), int(7));
        assert_eq!(upper_sum_harmonic(3, 2), int(7));
        for m in 1..=20 {
            assert_eq!(upper_sum_harmonic(m, m), harmonic(m), "diagonal m={m}");
            for j in 1..=m {
                assert_eq!(
                    upper_sum_harmonic(m, j),
                    direct_upper_harmonic(m, j),
                    "({m},{j})"
                );
            }
        }
    }

    #[test]
    fn upper_sum_reciprocal_matches_direct() {
        // 1/2 + 2/1 = 5/2 = 3·(11/6 − 1)
        assert_eq!(upper_sum_reciprocal(2, 1), ratio(5, 2));
        // 1/3 + 1 + 3 = 13/3
        assert_eq!(upper_sum_reciprocal(3, 1), ratio(13, 3));
        for m in 1..=20 {
            assert_eq!(upper_sum_reciprocal(m, m), int(1), "diagonal m={m}");
            for j in 1..=m {
                assert_eq!(
                    upper_sum_reciprocal(m, j),
                    direct_upper_reciprocal(m, j),
                    "({m},{j})"
                );
            }
        }
    }
}

//! Exact arbitrary-precision combinatorial kernels: binomial coefficients,
//! Stirling numbers of both kinds, Eulerian polynomials and harmonic numbers.
//!
//! Everything here is a pure function returning an owned exact value, so the
//! whole module is safe to use from any number of threads. Triangle-based
//! quantities rebuild their rows per call instead of caching them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{BigCardinal, ExactRational};

/// n! as an arbitrary-precision integer.
pub fn factorial(n: u32) -> BigCardinal {
    (1..=n).fold(BigCardinal::one(), |acc, i| acc * i)
}

/// Binomial coefficient C(n, k). Returns 0 when k > n, matching the
/// empty-selection convention the summation identities rely on.
pub fn binomial(n: u32, k: u32) -> BigCardinal {
    if k > n {
        return BigCardinal::zero();
    }
    num_integer::binomial(BigCardinal::from(n), BigCardinal::from(k))
}

/// Classical Stirling number of the second kind S(n, k): the number of
/// partitions of an n-set into k nonempty blocks. Returns 0 when k > n.
///
/// Computed by the triangular recurrence S(n+1, k) = k·S(n, k) + S(n, k−1),
/// one row at a time. The alternating-sum route (see
/// [`crate::stirling::stirling_function_exact`]) is kept as a cross-check
/// only, since it is the cancellation-prone path in floating point.
pub fn stirling2_exact(n: u32, k: u32) -> BigCardinal {
    if k > n {
        return BigCardinal::zero();
    }
    if n == 0 {
        return BigCardinal::one(); // S(0, 0) = 1
    }
    if k == 0 {
        return BigCardinal::zero();
    }
    // row[j] = S(i, j) for the current i
    let mut row = vec![BigCardinal::one()]; // S(1, 1)
    for i in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 1..=i + 1 {
            let keep = if j <= i {
                row[j as usize - 1].clone() * j
            } else {
                BigCardinal::zero()
            };
            let split = if j >= 2 {
                row[j as usize - 2].clone()
            } else {
                BigCardinal::zero()
            };
            next.push(keep + split);
        }
        row = next;
    }
    row[k as usize - 1].clone()
}

/// Unsigned Stirling number of the first kind c(m, k): the number of
/// permutations of m elements with exactly k cycles. Returns 0 when k > m.
pub fn stirling1_unsigned(m: u32, k: u32) -> BigCardinal {
    if k > m {
        return BigCardinal::zero();
    }
    if m == 0 {
        return BigCardinal::one(); // c(0, 0) = 1
    }
    if k == 0 {
        return BigCardinal::zero();
    }
    // c(i+1, j) = i·c(i, j) + c(i, j−1)
    let mut row = vec![BigCardinal::one()]; // c(1, 1)
    for i in 1..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 1..=i + 1 {
            let keep = if j <= i {
                row[j as usize - 1].clone() * i
            } else {
                BigCardinal::zero()
            };
            let insert = if j >= 2 {
                row[j as usize - 2].clone()
            } else {
                BigCardinal::zero()
            };
            next.push(keep + insert);
        }
        row = next;
    }
    row[k as usize - 1].clone()
}

/// Eulerian polynomial A_n(x) as an exact coefficient vector.
///
/// A_n is the numerator of the n-fold application of x·d/dx to 1/(1−x):
/// A_0(x) = 1, A_1(x) = x, A_2(x) = x + x², A_3(x) = x + 4x² + x³, …
/// The coefficient sum is n! and the nonzero part is palindromic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianPolynomial {
    coefficients: Vec<BigCardinal>,
}

impl EulerianPolynomial {
    /// Degree n of A_n(x).
    pub fn degree(&self) -> u32 {
        self.coefficients.len() as u32 - 1
    }

    /// Coefficients c\[0..=n\], where c\[i\] multiplies x^i.
    pub fn coefficients(&self) -> &[BigCardinal] {
        &self.coefficients
    }
}

/// Exact coefficients of the Eulerian polynomial A_n(x), via the triangular
/// recurrence E(n, d) = (d+1)·E(n−1, d) + (n−d)·E(n−1, d−1) on the Eulerian
/// numbers. The operator definition is used only as a test oracle; it is a
/// poor algorithm.
pub fn eulerian_polynomial(n: u32) -> EulerianPolynomial {
    if n == 0 {
        return EulerianPolynomial {
            coefficients: vec![BigCardinal::one()],
        };
    }
    // row[d] = E(r, d) for d = 0..r−1
    let mut row = vec![BigCardinal::one()]; // E(1, ·) = [1]
    for r in 2..=n {
        let mut next = Vec::with_capacity(r as usize);
        for d in 0..r {
            let stay = if (d as usize) < row.len() {
                row[d as usize].clone() * (d + 1)
            } else {
                BigCardinal::zero()
            };
            let rise = if d >= 1 {
                row[d as usize - 1].clone() * (r - d)
            } else {
                BigCardinal::zero()
            };
            next.push(stay + rise);
        }
        row = next;
    }
    // A_n(x) = Σ_d E(n, d) x^{d+1} for n ≥ 1
    let mut coefficients = Vec::with_capacity(n as usize + 1);
    coefficients.push(BigCardinal::zero());
    coefficients.extend(row);
    EulerianPolynomial { coefficients }
}

/// Exact harmonic number H_k = 1 + 1/2 + … + 1/k, in lowest terms.
pub fn harmonic(k: u32) -> ExactRational {
    assert!(k >= 1, "harmonic: k must be >= 1");
    (1..=k)
        .map(|i| ExactRational::new(BigInt::one(), BigInt::from(i)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: C(n, k) as a factorial ratio.
    fn binomial_by_factorials(n: u32, k: u32) -> BigCardinal {
        factorial(n) / (factorial(k) * factorial(n - k))
    }

    /// Oracle: count the partitions of {0, …, n−1} into exactly k nonempty
    /// blocks by exhaustive assignment.
    fn count_set_partitions(n: u32, k: u32) -> u64 {
        fn go(remaining: u32, blocks: u32, k: u32) -> u64 {
            if remaining == 0 {
                return u64::from(blocks == k);
            }
            // next element joins an existing block or opens a new one
            let mut total = blocks as u64 * go(remaining - 1, blocks, k);
            if blocks < k {
                total += go(remaining - 1, blocks + 1, k);
            }
            total
        }
        go(n, 0, k)
    }

    /// Oracle: enumerate all permutations of {0, …, m−1} and count those with
    /// exactly k cycles.
    fn count_permutations_with_cycles(m: usize, k: usize) -> u64 {
        fn cycles(perm: &[usize]) -> usize {
            let mut seen = vec![false; perm.len()];
            let mut count = 0;
            for start in 0..perm.len() {
                if !seen[start] {
                    count += 1;
                    let mut i = start;
                    while !seen[i] {
                        seen[i] = true;
                        i = perm[i];
                    }
                }
            }
            count
        }
        fn permute(items: &mut Vec<usize>, chosen: &mut Vec<usize>, k: usize, hits: &mut u64) {
            if items.is_empty() {
                if cycles(chosen) == k {
                    *hits += 1;
                }
                return;
            }
            for i in 0..items.len() {
                let item = items.remove(i);
                chosen.push(item);
                permute(items, chosen, k, hits);
                chosen.pop();
                items.insert(i, item);
            }
        }
        let mut hits = 0;
        permute(&mut (0..m).collect(), &mut Vec::new(), k, &mut hits);
        hits
    }

    /// Oracle: apply x·d/dx symbolically n times to 1/(1−x), tracking the
    /// numerator polynomial P over (1−x)^{n+1}:
    /// P_{n+1}(x) = x·(P_n′(x)(1−x) + (n+1)·P_n(x)).
    fn eulerian_by_operator(n: u32) -> Vec<BigInt> {
        let mut p = vec![BigInt::one()];
        for step in 0..n {
            // derivative
            let dp: Vec<BigInt> = (1..p.len()).map(|i| p[i].clone() * i).collect();
            // P′(x)(1−x) = P′(x) − x·P′(x)
            let mut t = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in dp.iter().enumerate() {
                t[i] += c;
                t[i + 1] -= c;
            }
            // + (step+1)·P
            for (i, c) in p.iter().enumerate() {
                t[i] += c * (step + 1);
            }
            // multiply by x
            t.insert(0, BigInt::zero());
            while t.last().is_some_and(|c| c.is_zero()) && t.len() > 1 {
                t.pop();
            }
            p = t;
        }
        p
    }

    fn card(v: u64) -> BigCardinal {
        BigCardinal::from(v)
    }

    #[test]
    fn binomial_matches_factorial_ratio() {
        assert_eq!(binomial(4, 2), card(6));
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial_by_factorials(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_edge_cases() {
        for n in [0, 1, 7, 30] {
            assert_eq!(binomial(n, 0), card(1));
        }
        assert_eq!(binomial(3, 5), card(0));
    }

    #[test]
    fn binomial_pascal_rule() {
        for m in 1..=30 {
            for k in 1..=m {
                assert_eq!(
                    binomial(m, k) + binomial(m, k - 1),
                    binomial(m + 1, k),
                    "Pascal rule at ({m},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling2_matches_partition_count() {
        assert_eq!(stirling2_exact(4, 2), card(7));
        for n in 1..=8 {
            for k in 1..=n {
                assert_eq!(
                    stirling2_exact(n, k),
                    card(count_set_partitions(n, k)),
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling2_edge_cases() {
        for n in 1..=10 {
            assert_eq!(stirling2_exact(n, n), card(1));
        }
        assert_eq!(stirling2_exact(2, 3), card(0));
    }

    #[test]
    fn stirling2_recurrence() {
        for n in 1..=20u32 {
            for k in 1..=n {
                let lhs = stirling2_exact(n + 1, k);
                let rhs = stirling2_exact(n, k) * k + stirling2_exact(n, k - 1);
                assert_eq!(lhs, rhs, "recurrence at ({n},{k})");
            }
        }
    }

    #[test]
    fn stirling1_matches_cycle_count() {
        assert_eq!(stirling1_unsigned(3, 2), card(3));
        for m in 1..=6 {
            for k in 1..=m {
                assert_eq!(
                    stirling1_unsigned(m, k),
                    card(count_permutations_with_cycles(m as usize, k as usize)),
                    "c({m},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling1_edge_cases() {
        for m in 1..=10 {
            assert_eq!(stirling1_unsigned(m, m), card(1));
        }
        // single cycle count is (m−1)!
        assert_eq!(stirling1_unsigned(4, 1), card(6));
        assert_eq!(stirling1_unsigned(4, 7), card(0));
    }

    #[test]
    fn stirling1_row_sums_are_factorials() {
        for m in 1..=15 {
            let sum: BigCardinal = (1..=m).map(|k| stirling1_unsigned(m, k)).sum();
            assert_eq!(sum, factorial(m), "row sum at m={m}");
        }
    }

    #[test]
    fn eulerian_matches_operator_oracle() {
        for n in 0..=5 {
            let poly = eulerian_polynomial(n);
            let oracle = eulerian_by_operator(n);
            let got: Vec<BigInt> = poly
                .coefficients()
                .iter()
                .map(|c| BigInt::from(c.clone()))
                .collect();
            assert_eq!(got, oracle, "A_{n}");
        }
    }

    #[test]
    fn eulerian_small_values() {
        assert_eq!(eulerian_polynomial(0).coefficients(), &[card(1)]);
        assert_eq!(
            eulerian_polynomial(2).coefficients(),
            &[card(0), card(1), card(1)]
        );
        assert_eq!(
            eulerian_polynomial(3).coefficients(),
            &[card(0), card(1), card(4), card(1)]
        );
    }

    #[test]
    fn eulerian_coefficient_sum_and_palindrome() {
        for n in 0..=12u32 {
            let poly = eulerian_polynomial(n);
            let c = poly.coefficients();
            let sum: BigCardinal = c.iter().cloned().sum();
            assert_eq!(sum, factorial(n), "coefficient sum at n={n}");
            if n >= 1 {
                assert!(c[0].is_zero());
                for i in 1..=n as usize {
                    assert_eq!(c[i], c[n as usize + 1 - i], "palindrome at n={n}, i={i}");
                }
            }
        }
    }

    #[test]
    fn harmonic_small_values() {
        let r = |n: i64, d: i64| ExactRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(harmonic(1), r(1, 1));
        assert_eq!(harmonic(3), r(11, 6));
        assert_eq!(harmonic(5), r(137, 60));
    }

    #[test]
    fn harmonic_difference_is_reciprocal() {
        for k in 2..=50 {
            let diff = harmonic(k) - harmonic(k - 1);
            assert_eq!(
                diff,
                ExactRational::new(BigInt::one(), BigInt::from(k)),
                "k={k}"
            );
        }
    }
}

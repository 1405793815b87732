//! Elementary symmetric polynomials and the Chern→Segre recurrence.
//!
//! Everything here is exact integer arithmetic. The two workhorses:
//!
//! - [`elem_sym_prefix`]: coefficients of `Π_i (1 + w_i t)` truncated at a
//!   requested degree, i.e. `e_0, e_1, …` of an integer multiset.
//! - [`segre_from_chern`]: `A_0 = 1`, `A_i = Σ_{j=1..i} (-1)^(j-1) c_j A_{i-j}`,
//!   the linear recurrence equivalent to the i×i Hessenberg determinant with
//!   the `c`'s on and above the diagonal and 1's on the subdiagonal.
//!
//! [`hessenberg_det`] computes that determinant literally (fraction-free
//! Gaussian elimination) and exists as a differential-testing oracle for the
//! recurrence; production code never calls it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Multiset of torus weights for a second symmetric power: given fiber
/// weights `v_1,…,v_d`, the weights are `v_i + v_j` for all `i <= j`, hence
/// always C(d+1, 2) of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    weights: Vec<BigInt>,
}

impl WeightMultiset {
    /// Weights of S² of a fiber with the given weights: the doubles `2v_i`
    /// first, then the cross terms `v_i + v_j` for `i < j`.
    pub fn symmetric_square(values: &[BigInt]) -> Self {
        let d = values.len();
        let mut weights = Vec::with_capacity(d * (d + 1) / 2);
        for v in values {
            weights.push(v + v);
        }
        for i in 0..d {
            for j in i + 1..d {
                weights.push(&values[i] + &values[j]);
            }
        }
        WeightMultiset { weights }
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// e_0,…,e_up_to of the multiset, as the truncated product `Π (1 + w t)`.
/// e_0 = 1, and e_i = 0 for i beyond the multiset size.
pub fn elem_sym_prefix(weights: &[BigInt], up_to: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); up_to + 1];
    e[0] = BigInt::one();
    let mut top = 0usize;
    for w in weights {
        top = (top + 1).min(up_to);
        for i in (1..=top).rev() {
            let add = &e[i - 1] * w;
            e[i] += add;
        }
    }
    e
}

/// Segre-style values A_0,…,A_up_to from Chern-style inputs `c = (1, c_1, …)`.
///
/// Entries of `chern` past the end are treated as zero, so the recurrence is
/// well-defined even when `up_to` exceeds the number of supplied c's.
pub fn segre_from_chern(chern: &[BigInt], up_to: usize) -> Vec<BigInt> {
    assert!(
        chern.first().is_some_and(|c| c.is_one()),
        "chern sequence must start with 1"
    );
    let mut a = vec![BigInt::zero(); up_to + 1];
    a[0] = BigInt::one();
    for i in 1..=up_to {
        let mut acc = BigInt::zero();
        for j in 1..=i.min(chern.len() - 1) {
            let term = &chern[j] * &a[i - j];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        a[i] = acc;
    }
    a
}

/// Literal i×i Hessenberg determinant with `c_1..c_i` on and above the
/// diagonal and ones on the subdiagonal; the empty determinant is 1,
/// matching A₀ = 1. Takes the same `(1, c_1, …)` shape as
/// [`segre_from_chern`]; evaluated by fraction-free (Bareiss) elimination,
/// deliberately sharing nothing with the recurrence it checks.
pub fn hessenberg_det(chern: &[BigInt], i: usize) -> BigInt {
    let c = |idx: usize| -> BigInt { chern.get(idx).cloned().unwrap_or_else(BigInt::zero) };
    let mut m = vec![vec![BigInt::zero(); i]; i];
    for (p, row) in m.iter_mut().enumerate() {
        for (q, entry) in row.iter_mut().enumerate() {
            if q >= p {
                *entry = c(q - p + 1);
            } else if q + 1 == p {
                *entry = BigInt::one();
            }
        }
    }
    bareiss_det(m)
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&p| !m[p][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn elem_sym_examples() {
        assert_eq!(elem_sym_prefix(&[], 2), bigs(&[1, 0, 0]));
        assert_eq!(elem_sym_prefix(&bigs(&[6]), 1), bigs(&[1, 6]));
        assert_eq!(elem_sym_prefix(&bigs(&[1, 2, 3]), 3), bigs(&[1, 6, 11, 6]));
    }

    #[test]
    fn elem_sym_truncates_and_pads() {
        // Truncation below the multiset size, zeros above it.
        assert_eq!(elem_sym_prefix(&bigs(&[1, 2, 3]), 1), bigs(&[1, 6]));
        assert_eq!(elem_sym_prefix(&bigs(&[1, 2]), 4), bigs(&[1, 3, 2, 0, 0]));
    }

    #[test]
    fn symmetric_square_weights() {
        let w = WeightMultiset::symmetric_square(&bigs(&[0, 1]));
        assert_eq!(w.weights(), &bigs(&[0, 2, 1])[..]);
        assert_eq!(WeightMultiset::symmetric_square(&[]).len(), 0);
        let w3 = WeightMultiset::symmetric_square(&bigs(&[1, 2, 3]));
        assert_eq!(w3.len(), 6);
        assert_eq!(w3.weights(), &bigs(&[2, 4, 6, 3, 4, 5])[..]);
    }

    #[test]
    fn segre_examples() {
        // A_1 = c_1, A_2 = c_1^2 - c_2, A_3 = c_1^3 - 2 c_1 c_2 + c_3.
        let c = bigs(&[1, 5, 3, 2]);
        let a = segre_from_chern(&c, 3);
        assert_eq!(a[0], big(1));
        assert_eq!(a[1], big(5));
        assert_eq!(a[2], big(25 - 3));
        assert_eq!(a[3], big(125 - 2 * 5 * 3 + 2));
    }

    #[test]
    fn hessenberg_examples() {
        assert_eq!(hessenberg_det(&bigs(&[1, 5]), 0), big(1));
        assert_eq!(hessenberg_det(&bigs(&[1, 5]), 1), big(5));
        assert_eq!(hessenberg_det(&bigs(&[1, 3, 1]), 2), big(8));
        assert_eq!(hessenberg_det(&bigs(&[1, 0, 0]), 2), big(0));
    }

    proptest! {
        // Generating-function identity: elem_sym_prefix really is the
        // truncation of the expanded product, checked by direct polynomial
        // multiplication with no truncation.
        #[test]
        fn generating_function_identity(ws in prop::collection::vec(-50i64..=50, 0..=10), up_to in 0usize..=12) {
            let weights = bigs(&ws);
            let mut full = vec![BigInt::one()];
            for w in &weights {
                let mut next = vec![BigInt::zero(); full.len() + 1];
                for (i, c) in full.iter().enumerate() {
                    next[i] += c;
                    next[i + 1] += c * w;
                }
                full = next;
            }
            let got = elem_sym_prefix(&weights, up_to);
            prop_assert_eq!(got.len(), up_to + 1);
            for (i, g) in got.iter().enumerate() {
                let want = full.get(i).cloned().unwrap_or_else(BigInt::zero);
                prop_assert_eq!(g, &want);
            }
        }

        // Convolution identity: Σ_{j=0..i} (-1)^j c_j A_{i-j} = 0 for i >= 1.
        #[test]
        fn chern_segre_convolution(cs in prop::collection::vec(-30i64..=30, 1..=12)) {
            let mut chern = vec![BigInt::one()];
            chern.extend(bigs(&cs));
            let top = chern.len() - 1;
            let a = segre_from_chern(&chern, top);
            for i in 1..=top {
                let mut acc = BigInt::zero();
                for j in 0..=i {
                    let term = &chern[j] * &a[i - j];
                    if j % 2 == 0 { acc += term } else { acc -= term }
                }
                prop_assert_eq!(acc, BigInt::zero());
            }
        }

        // The recurrence equals the literal determinant.
        #[test]
        fn segre_matches_hessenberg(cs in prop::collection::vec(-30i64..=30, 8)) {
            let mut chern = vec![BigInt::one()];
            chern.extend(bigs(&cs));
            let a = segre_from_chern(&chern, 8);
            for (i, ai) in a.iter().enumerate().skip(1) {
                prop_assert_eq!(ai, &hessenberg_det(&chern, i));
            }
        }
    }
}

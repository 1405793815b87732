//! Universal Chern classes of a symmetric square.
//!
//! A rank-d bundle with Chern roots y₁..y_d has symmetric square with roots
//! {y_a + y_b : a ≤ b}. The Chern classes of the square are the elementary
//! symmetric polynomials of those sums; being symmetric in y, they are
//! integer polynomials in e_i = e_i(y) = c_i of the original bundle. This
//! module computes those polynomials once per rank. Evaluating them — at
//! integers here, at Schubert classes in [`crate::schubert`] — produces
//! c_j(S²E) for any concrete bundle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse polynomial in y₁..y_d: exponent vector (length d) → coefficient.
/// `Vec<u32>` keys of equal length order lexicographically with y₁ heaviest,
/// so `last_key_value` is the lex-leading term.
type Mpoly = BTreeMap<Vec<u32>, BigInt>;

fn mpoly_add_term(p: &mut Mpoly, key: Vec<u32>, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match p.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn mpoly_mul(a: &Mpoly, b: &Mpoly) -> Mpoly {
    let mut out = Mpoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            mpoly_add_term(&mut out, key, va * vb);
        }
    }
    out
}

/// p · (y_a + y_b); a == b gives 2·p·y_a.
fn mpoly_mul_root_sum(p: &Mpoly, a: usize, b: usize) -> Mpoly {
    let mut out = Mpoly::new();
    for (key, coeff) in p {
        for idx in [a, b] {
            let mut shifted = key.clone();
            shifted[idx] += 1;
            mpoly_add_term(&mut out, shifted, coeff.clone());
        }
    }
    out
}

/// e_i(y₁..y_d) as an explicit polynomial: all 0/1 exponent vectors of
/// weight i.
fn elementary(d: usize, i: usize) -> Mpoly {
    let mut out = Mpoly::new();
    if i > d {
        return out;
    }
    let mut members: Vec<usize> = (0..i).collect();
    loop {
        let mut key = vec![0u32; d];
        for &m in &members {
            key[m] = 1;
        }
        out.insert(key, BigInt::one());
        // next i-combination of 0..d
        let mut j = i;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if members[j] < d - (i - j) {
                members[j] += 1;
                for t in j + 1..i {
                    members[t] = members[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Π e_i^{exps[i-1]} expanded over the roots, memoized per exponent vector.
fn e_monomial(cache: &mut HashMap<Vec<u32>, Mpoly>, d: usize, exps: &[u32]) -> Mpoly {
    if let Some(p) = cache.get(exps) {
        return p.clone();
    }
    let mut out = Mpoly::new();
    out.insert(vec![0; d], BigInt::one());
    for (i, &e) in exps.iter().enumerate() {
        let basis = elementary(d, i + 1);
        for _ in 0..e {
            out = mpoly_mul(&out, &basis);
        }
    }
    cache.insert(exps.to_vec(), out.clone());
    out
}

/// Integer-coefficient polynomial in the formal elementary symmetric
/// generators e₁..e_d. Keys of `terms` are exponent vectors of length d
/// (e.g. `[2, 1]` ↦ e₁²e₂); no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPolynomial {
    gens: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl EPolynomial {
    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitute concrete integers for e₁..e_d.
    pub fn evaluate(&self, e_values: &[BigInt]) -> BigInt {
        assert_eq!(e_values.len(), self.gens, "one value per generator");
        let mut total = BigInt::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &e) in e_values.iter().zip(exps) {
                for _ in 0..e {
                    term *= value;
                }
            }
            total += term;
        }
        total
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            if pos == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("e{}", i + 1)),
                    _ => factors.push(format!("e{}^{}", i + 1, e)),
                }
            }
            let mag = coeff.abs();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Rewrite a symmetric polynomial into the e-basis by greedy elimination:
/// the lex-leading exponent α of a symmetric polynomial is weakly
/// decreasing, and Π e_i^{α_i − α_{i+1}} has exactly that leading monomial.
fn to_e_basis(mut p: Mpoly, d: usize, cache: &mut HashMap<Vec<u32>, Mpoly>) -> EPolynomial {
    let mut terms = BTreeMap::new();
    while let Some((alpha, coeff)) = p.last_key_value() {
        let (alpha, coeff) = (alpha.clone(), coeff.clone());
        debug_assert!(
            alpha.windows(2).all(|w| w[0] >= w[1]),
            "leading exponent of a symmetric polynomial is a partition"
        );
        let mut exps = vec![0u32; d];
        for i in 0..d {
            let next = if i + 1 < d { alpha[i + 1] } else { 0 };
            exps[i] = alpha[i] - next;
        }
        for (key, value) in e_monomial(cache, d, &exps) {
            mpoly_add_term(&mut p, key, -(coeff.clone() * value));
        }
        terms.insert(exps, coeff);
    }
    EPolynomial { gens: d, terms }
}

/// The polynomials P₀..P_up_to with P_j(e₁(y),…,e_d(y)) equal to the j-th
/// elementary symmetric polynomial of {y_a + y_b : a ≤ b}, for any rank-d
/// bundle. P₀ = 1; P_j = 0 for j > C(d+1,2).
pub fn universal_chern_sym_square(d: usize, up_to: usize) -> Vec<EPolynomial> {
    let mut coeffs: Vec<Mpoly> = vec![Mpoly::new(); up_to + 1];
    coeffs[0].insert(vec![0; d], BigInt::one());
    for a in 0..d {
        for b in a..d {
            for j in (1..=up_to).rev() {
                let shifted = mpoly_mul_root_sum(&coeffs[j - 1], a, b);
                for (key, value) in shifted {
                    mpoly_add_term(&mut coeffs[j], key, value);
                }
            }
        }
    }
    let mut cache = HashMap::new();
    coeffs
        .into_iter()
        .map(|p| to_e_basis(p, d, &mut cache))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{elem_sym_prefix, WeightMultiset};
    use proptest::prelude::*;

    fn term(pairs: &[(&[u32], i64)], gens: usize) -> EPolynomial {
        EPolynomial {
            gens,
            terms: pairs
                .iter()
                .map(|(k, v)| (k.to_vec(), BigInt::from(*v)))
                .collect(),
        }
    }

    #[test]
    fn rank_one_square() {
        let p = universal_chern_sym_square(1, 1);
        assert_eq!(p[1], term(&[(&[1], 2)], 1));
        assert_eq!(p[1].to_string(), "2*e1");
    }

    #[test]
    fn rank_two_square() {
        let p = universal_chern_sym_square(2, 4);
        assert_eq!(p[0], term(&[(&[0, 0], 1)], 2));
        assert_eq!(p[1], term(&[(&[1, 0], 3)], 2));
        assert_eq!(p[2], term(&[(&[2, 0], 2), (&[0, 1], 4)], 2));
        assert_eq!(p[3], term(&[(&[1, 1], 4)], 2));
        assert_eq!(p[2].to_string(), "2*e1^2 + 4*e2");
        assert_eq!(p[3].to_string(), "4*e1*e2");
        // only C(3,2) = 3 weights, so e₄ of them vanishes
        assert!(p[4].is_zero());
        assert_eq!(p[4].to_string(), "0");
    }

    #[test]
    fn rank_zero_square() {
        let p = universal_chern_sym_square(0, 2);
        assert_eq!(p[0], term(&[(&[], 1)], 0));
        assert!(p[1].is_zero());
        assert!(p[2].is_zero());
        assert_eq!(p[0].evaluate(&[]), BigInt::one());
    }

    #[test]
    fn elementary_expansions() {
        assert_eq!(elementary(3, 0), [(vec![0, 0, 0], BigInt::one())].into());
        assert_eq!(
            elementary(3, 2),
            [
                (vec![1, 1, 0], BigInt::one()),
                (vec![1, 0, 1], BigInt::one()),
                (vec![0, 1, 1], BigInt::one()),
            ]
            .into()
        );
        assert!(elementary(2, 3).is_empty());
    }

    proptest! {
        // The defining property: substituting e_i of concrete roots into P_j
        // recovers e_j of the pairwise sums.
        #[test]
        fn matches_direct_expansion(roots in proptest::collection::vec(-9i64..=9, 1..=4)) {
            let d = roots.len();
            let roots: Vec<BigInt> = roots.into_iter().map(BigInt::from).collect();
            let up_to = d * (d + 1) / 2 + 1;
            let polys = universal_chern_sym_square(d, up_to);
            let e_values = &elem_sym_prefix(&roots, d)[1..];
            let square = WeightMultiset::symmetric_square(&roots);
            let direct = elem_sym_prefix(square.weights(), up_to);
            for (j, p) in polys.iter().enumerate() {
                prop_assert_eq!(p.evaluate(e_values), direct[j].clone(), "degree {}", j);
            }
        }
    }
}

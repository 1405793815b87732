//! The torus-localization evaluation of the algebraic degree.
//!
//! The degree is computed as a fixed-point sum over the C(n,r) coordinate
//! r-planes of the Grassmannian G(r,n):
//!
//! ```text
//! delta(m,n,r) = (-1)^l · Σ_I  A_{k,I^c} · A_{l,I} / T_I
//! ```
//!
//! with `k = m - C(n-r+1,2)`, `l = C(n+1,2) - m - C(r+1,2)`, `I` running over
//! the r-subsets of {1,…,n}, `T_I = Π_{i∈I} Π_{j∉I} (λ_j - λ_i)`, and the
//! `A`'s obtained by the Segre recurrence over the elementary symmetric
//! polynomials of the weights `{λ_i + λ_j : i ≤ j}` of the subset (for
//! `A_{l,I}`) and its complement (for `A_{k,I^c}`).
//!
//! The summand is a rational function of λ that is in fact a constant
//! integer: any pairwise-distinct integer specialization of λ gives the same
//! value. The engine therefore evaluates at integer specializations, checks
//! that the sum has denominator 1, and (optionally) re-evaluates at further
//! specializations to certify constancy.
//!
//! All arithmetic is exact. The sum is split into contiguous colex-rank
//! chunks folded independently and merged in rank order, so the result is
//! identical for any worker count.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use crate::error::{Error, InternalError, ParamError};
use crate::fault;
use crate::subsets::{binomial, SubsetIndex};
use crate::symfunc::{elem_sym_prefix, segre_from_chern, WeightMultiset};
use crate::ExactRational;

/// Ranks folded per work unit. Fixed so the chunk layout (and hence the
/// merge order) never depends on the worker count.
const CHUNK_RANKS: u128 = 64;

/// C(x+1, 2) = x(x+1)/2, the number of unordered pairs with repetition
/// ignored… i.e. the triangular numbers. Fits u64 for any u32 input.
fn pairs(x: u64) -> u64 {
    x * (x + 1) / 2
}

/// A validated parameter triple (m, n, r) inside the admissible window
///
/// ```text
/// C(n-r+1, 2) <= m    and    C(r+1, 2) <= C(n+1, 2) - m
/// ```
///
/// with the derived codimensions `k = m - C(n-r+1,2)` and
/// `l = C(n+1,2) - m - C(r+1,2)`; these always satisfy `k + l = r(n-r)`.
///
/// `r = 0` is admitted as the degenerate point Grassmannian (the window then
/// forces `m = C(n+1,2)` and `k = l = 0`); it arises as the dual of `r = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemTriple {
    m: u64,
    n: u32,
    r: u32,
    k: u64,
    l: u64,
}

impl ProblemTriple {
    /// Validate (m, n, r) against the window and derive (k, l).
    pub fn new(m: u64, n: u32, r: u32) -> Result<Self, ParamError> {
        if n == 0 {
            return Err(ParamError::MatrixSizeZero);
        }
        if r > n {
            return Err(ParamError::RankExceedsSize { r, n });
        }
        let lower = pairs((n - r) as u64);
        if m < lower {
            return Err(ParamError::WindowLower { m, n, r, lower });
        }
        let upper = pairs(n as u64) - pairs(r as u64);
        if m > upper {
            return Err(ParamError::WindowUpper {
                m,
                n,
                r,
                lhs: pairs(r as u64),
                rhs: pairs(n as u64) - m,
            });
        }
        let k = m - lower;
        let l = upper - m;
        debug_assert_eq!(k + l, r as u64 * (n - r) as u64);
        Ok(ProblemTriple { m, n, r, k, l })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `m - C(n-r+1, 2)`.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// `C(n+1, 2) - m - C(r+1, 2)`.
    pub fn l(&self) -> u64 {
        self.l
    }

    /// dim G(r, n) = r(n-r) = k + l.
    pub fn grassmann_dim(&self) -> u64 {
        self.k + self.l
    }

    /// The dual triple (C(n+1,2) - m, n, n - r); always valid when `self` is.
    pub fn dual(&self) -> ProblemTriple {
        ProblemTriple::new(pairs(self.n as u64) - self.m, self.n, self.n - self.r)
            .expect("dual of a valid triple is valid")
    }

    /// Number of fixed points, C(n, r).
    pub fn fixed_point_count(&self) -> Result<u128, ParamError> {
        binomial(self.n as u64, self.r as u64)
    }
}

/// The admissible m-range for given (n, r): `C(n-r+1,2) ..= C(n+1,2) - C(r+1,2)`.
/// Nonempty for every 0 <= r <= n.
pub fn m_window(n: u32, r: u32) -> std::ops::RangeInclusive<u64> {
    pairs((n - r) as u64)..=(pairs(n as u64) - pairs(r as u64))
}

/// Every valid triple for the given n, rank-major (r ascending from 1, then
/// m ascending) — the canonical table order.
pub fn window_triples(n: u32) -> Vec<ProblemTriple> {
    let mut triples = Vec::new();
    for r in 1..=n {
        for m in m_window(n, r) {
            triples.push(ProblemTriple::new(m, n, r).expect("window m is valid"));
        }
    }
    triples
}

/// An integer specialization of (λ_1,…,λ_n); entries are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    lambda: Vec<BigInt>,
}

impl Specialization {
    pub fn new(lambda: Vec<BigInt>) -> Result<Self, ParamError> {
        let mut sorted = lambda.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ParamError::SpecializationRepeated {
                value: w[0].clone(),
            });
        }
        Ok(Specialization { lambda })
    }

    /// The default specialization λ = (0, 1, …, n-1).
    pub fn sequential(n: u32) -> Self {
        Specialization {
            lambda: (0..n as i64).map(BigInt::from).collect(),
        }
    }

    pub fn lambda(&self) -> &[BigInt] {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// λ_i for the 1-based index i.
    fn value(&self, i: u32) -> &BigInt {
        &self.lambda[(i - 1) as usize]
    }
}

/// How `delta_certified` produces its sequence of specializations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecializationStrategy {
    /// Check t uses λ = (t, t+1, …, t+n-1).
    Sequential,
    /// Check t uses λ = (t+n-1, …, t+1, t).
    ReversedSequential,
    /// Distinct integers drawn without replacement from [-10000, 10000] by a
    /// ChaCha20 stream seeded with `seed`; check t consumes the next n draws.
    Random { seed: u64 },
    /// A caller-supplied λ; only a single check is possible.
    Explicit(Vec<BigInt>),
}

impl SpecializationStrategy {
    /// Produce `count` distinct specializations of length n.
    pub fn specializations(&self, n: u32, count: usize) -> Result<Vec<Specialization>, ParamError> {
        if count == 0 {
            return Err(ParamError::ZeroChecks);
        }
        match self {
            SpecializationStrategy::Sequential => Ok((0..count as i64)
                .map(|t| Specialization {
                    lambda: (t..t + n as i64).map(BigInt::from).collect(),
                })
                .collect()),
            SpecializationStrategy::ReversedSequential => Ok((0..count as i64)
                .map(|t| Specialization {
                    lambda: (t..t + n as i64).rev().map(BigInt::from).collect(),
                })
                .collect()),
            SpecializationStrategy::Random { seed } => {
                if n > 20_001 {
                    return Err(ParamError::RandomRangeExhausted { n });
                }
                let mut rng = ChaCha20Rng::seed_from_u64(*seed);
                let mut specs = Vec::with_capacity(count);
                for _ in 0..count {
                    let mut seen = HashSet::with_capacity(n as usize);
                    let mut lambda = Vec::with_capacity(n as usize);
                    while lambda.len() < n as usize {
                        let v: i64 = rng.random_range(-10_000..=10_000);
                        if seen.insert(v) {
                            lambda.push(BigInt::from(v));
                        }
                    }
                    specs.push(Specialization { lambda });
                }
                Ok(specs)
            }
            SpecializationStrategy::Explicit(lambda) => {
                if count != 1 {
                    return Err(ParamError::ExplicitLambdaChecks { checks: count });
                }
                if lambda.len() != n as usize {
                    return Err(ParamError::SpecializationLength {
                        expected: n as usize,
                        got: lambda.len(),
                    });
                }
                Ok(vec![Specialization::new(lambda.clone())?])
            }
        }
    }
}

/// A certified degree: the common value of all checked evaluations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeResult {
    pub value: BigInt,
    pub triple: ProblemTriple,
    pub specializations_checked: usize,
    pub oracle_checked: bool,
}

/// The S² weight multiset {λ_i + λ_j : i <= j in S} of a subset.
pub fn weights_for(subset: &SubsetIndex, spec: &Specialization) -> WeightMultiset {
    let values: Vec<BigInt> = subset
        .members()
        .iter()
        .map(|&i| spec.value(i).clone())
        .collect();
    WeightMultiset::symmetric_square(&values)
}

/// The equivariant Euler class T_I = Π_{i∈I} Π_{j∉I} (λ_j - λ_i).
pub fn euler_t(subset: &SubsetIndex, spec: &Specialization) -> Result<BigInt, InternalError> {
    euler_t_with_complement(subset, &subset.complement(), spec)
}

fn euler_t_with_complement(
    subset: &SubsetIndex,
    complement: &SubsetIndex,
    spec: &Specialization,
) -> Result<BigInt, InternalError> {
    let mut t = BigInt::one();
    for &i in subset.members() {
        let li = spec.value(i);
        for &j in complement.members() {
            let factor = spec.value(j) - li;
            if factor.is_zero() {
                return Err(InternalError::ZeroEulerFactor);
            }
            t *= factor;
        }
    }
    Ok(t)
}

/// Per-subset Segre data: (A_{·,I^c} up to k_max, A_{·,I} up to l_max, T_I).
fn subset_segre_data(
    subset: &SubsetIndex,
    spec: &Specialization,
    k_max: usize,
    l_max: usize,
) -> Result<(Vec<BigInt>, Vec<BigInt>, BigInt), InternalError> {
    let complement = subset.complement();
    let own = weights_for(subset, spec);
    let a_own = segre_from_chern(&elem_sym_prefix(own.weights(), l_max), l_max);
    let compl = weights_for(&complement, spec);
    let a_compl = segre_from_chern(&elem_sym_prefix(compl.weights(), k_max), k_max);
    let t = euler_t_with_complement(subset, &complement, spec)?;
    Ok((a_compl, a_own, t))
}

/// One fixed-point term A_{k,I^c} · A_{l,I} / T_I (the global (-1)^l sign is
/// *not* included; it is applied once after summation).
pub fn fixed_point_term(
    subset: &SubsetIndex,
    triple: &ProblemTriple,
    spec: &Specialization,
) -> Result<ExactRational, InternalError> {
    assert_eq!(
        subset.len(),
        triple.r() as usize,
        "fixed points of G(r,n) are r-subsets"
    );
    let (a_compl, a_own, t) =
        subset_segre_data(subset, spec, triple.k() as usize, triple.l() as usize)?;
    let numerator = &a_compl[triple.k() as usize] * &a_own[triple.l() as usize];
    Ok(ExactRational::new(numerator, t))
}

/// Pre-sign sums Σ_I A_{k,I^c} A_{l,I} / T_I for several (k, l) pairs sharing
/// the same (n, r, λ): the per-subset Segre vectors are computed once and
/// reused across all pairs. Chunked over colex ranks; partials merged in rank
/// order, so the result is independent of the rayon worker count.
fn window_sums(
    n: u32,
    r: u32,
    kl_pairs: &[(u64, u64)],
    spec: &Specialization,
) -> Result<Vec<ExactRational>, Error> {
    let total = binomial(n as u64, r as u64)?;
    debug_assert!(total > 0);
    let k_max = kl_pairs.iter().map(|&(k, _)| k).max().unwrap_or(0) as usize;
    let l_max = kl_pairs.iter().map(|&(_, l)| l).max().unwrap_or(0) as usize;
    let chunks = total.div_ceil(CHUNK_RANKS);

    let fold_chunk = |chunk: u128| -> Result<Vec<ExactRational>, Error> {
        let start = chunk * CHUNK_RANKS;
        let end = (start + CHUNK_RANKS).min(total);
        let mut subset = SubsetIndex::unrank(start, n, r)?;
        let mut acc = vec![ExactRational::zero(); kl_pairs.len()];
        for rank in start..end {
            let (a_compl, a_own, t) = subset_segre_data(&subset, spec, k_max, l_max)?;
            for (slot, &(k, l)) in acc.iter_mut().zip(kl_pairs) {
                let numerator = &a_compl[k as usize] * &a_own[l as usize];
                if !numerator.is_zero() {
                    *slot += ExactRational::new(numerator, t.clone());
                }
            }
            if rank + 1 < end {
                subset.advance();
            }
        }
        Ok(acc)
    };

    let partials: Result<Vec<Vec<ExactRational>>, Error> = if chunks == 1 {
        fold_chunk(0).map(|acc| vec![acc])
    } else {
        (0..chunks as u64)
            .into_par_iter()
            .map(|chunk| fold_chunk(chunk as u128))
            .collect()
    };

    let mut sums = vec![ExactRational::zero(); kl_pairs.len()];
    for partial in partials? {
        for (sum, part) in sums.iter_mut().zip(partial) {
            *sum += part;
        }
    }
    Ok(sums)
}

/// Apply the global (-1)^l sign and demand an integer.
fn finish(triple: &ProblemTriple, raw: ExactRational) -> Result<BigInt, Error> {
    let signed = if triple.l() % 2 == 1 { -raw } else { raw };
    if !signed.is_integer() {
        return Err(InternalError::NonIntegerSum {
            m: triple.m(),
            n: triple.n(),
            r: triple.r(),
            sum: signed.to_string(),
        }
        .into());
    }
    let mut value = signed.to_integer();
    if fault::sign_flip() {
        value = -value;
    }
    Ok(value)
}

/// The pre-sign rational sum Σ_I A_{k,I^c} A_{l,I} / T_I. Exposed so tests
/// can assert integrality directly.
pub fn delta_raw_sum(
    triple: &ProblemTriple,
    spec: &Specialization,
) -> Result<ExactRational, Error> {
    check_spec_len(triple, spec)?;
    Ok(window_sums(triple.n(), triple.r(), &[(triple.k(), triple.l())], spec)?.remove(0))
}

/// delta(m,n,r) evaluated at one specialization.
pub fn delta(triple: &ProblemTriple, spec: &Specialization) -> Result<BigInt, Error> {
    let raw = delta_raw_sum(triple, spec)?;
    finish(triple, raw)
}

/// All degrees for a fixed (n, r) at once, m ascending across the window.
/// Equivalent to calling [`delta`] per row, but the expensive per-subset data
/// is shared across the whole row set.
pub fn rank_rows(
    n: u32,
    r: u32,
    spec: &Specialization,
) -> Result<Vec<(ProblemTriple, BigInt)>, Error> {
    let triples: Vec<ProblemTriple> = m_window(n, r)
        .map(|m| ProblemTriple::new(m, n, r).expect("window m is valid"))
        .collect();
    if let Some(first) = triples.first() {
        check_spec_len(first, spec)?;
    }
    let kl_pairs: Vec<(u64, u64)> = triples.iter().map(|t| (t.k(), t.l())).collect();
    let sums = window_sums(n, r, &kl_pairs, spec)?;
    triples
        .into_iter()
        .zip(sums)
        .map(|(t, raw)| finish(&t, raw).map(|v| (t, v)))
        .collect()
}

fn check_spec_len(triple: &ProblemTriple, spec: &Specialization) -> Result<(), ParamError> {
    if spec.len() != triple.n() as usize {
        return Err(ParamError::SpecializationLength {
            expected: triple.n() as usize,
            got: spec.len(),
        });
    }
    Ok(())
}

/// Evaluate at `checks` specializations from the strategy and demand one
/// common integer.
pub fn delta_certified(
    triple: &ProblemTriple,
    strategy: &SpecializationStrategy,
    checks: usize,
) -> Result<DegreeResult, Error> {
    let specs = strategy.specializations(triple.n(), checks)?;
    let mut value: Option<(BigInt, Specialization)> = None;
    for spec in specs {
        let v = delta(triple, &spec)?;
        match &value {
            None => value = Some((v, spec)),
            Some((first, first_spec)) => {
                if v != *first {
                    return Err(InternalError::SpecializationDisagreement {
                        m: triple.m(),
                        n: triple.n(),
                        r: triple.r(),
                        lambda_a: first_spec.lambda().into(),
                        value_a: first.clone(),
                        lambda_b: spec.lambda().into(),
                        value_b: v,
                    }
                    .into());
                }
            }
        }
    }
    let (value, _) = value.expect("checks >= 1");
    Ok(DegreeResult {
        value,
        triple: *triple,
        specializations_checked: checks,
        oracle_checked: false,
    })
}

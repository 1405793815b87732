//! r-subsets of {1,…,n} in colexicographic order.
//!
//! Colex order compares subsets by their largest element first, which gives
//! the combinadic: `rank(S) = Σ_j C(s_j - 1, j + 1)` over the sorted members
//! `s_1 < s_2 < …`. Unranking is O(r·n) and the successor is amortized O(1),
//! so the fixed-point sum can be split into contiguous rank chunks that
//! workers walk independently.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::ParamError;

/// C(n, k) as an exact u128, or an overflow error for inputs far beyond any
/// computable problem size (n ≳ 131).
pub fn binomial(n: u64, k: u64) -> Result<u128, ParamError> {
    if k > n {
        return Ok(0);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
        .to_u128()
        .ok_or(ParamError::BinomialOverflow { n, k })
}

/// A size-r subset of {1,…,n}: strictly increasing members plus the ambient n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    members: Vec<u32>,
    ambient: u32,
}

impl SubsetIndex {
    pub fn new(members: Vec<u32>, ambient: u32) -> Result<Self, ParamError> {
        let increasing = members.windows(2).all(|w| w[0] < w[1]);
        let in_range = members.iter().all(|&m| m >= 1 && m <= ambient);
        if !increasing || !in_range || members.len() > ambient as usize {
            return Err(ParamError::InvalidSubset { ambient });
        }
        Ok(SubsetIndex { members, ambient })
    }

    /// The rank-th subset of size `r` in colex order.
    pub fn unrank(rank: u128, n: u32, r: u32) -> Result<Self, ParamError> {
        let total = binomial(n as u64, r as u64)?;
        if rank >= total {
            return Err(ParamError::SubsetRankOutOfRange { rank, n, r, total });
        }
        let mut members = vec![0u32; r as usize];
        let mut remaining = rank;
        // Greedy combinadic digits, largest position first.
        let mut upper = n as u64;
        for j in (1..=r as u64).rev() {
            // Largest c < upper with C(c, j) <= remaining.
            let mut c = j - 1;
            let mut best = 0u128; // C(j-1, j) = 0
            for cand in j..upper {
                let b = binomial(cand, j)?;
                if b <= remaining {
                    c = cand;
                    best = b;
                } else {
                    break;
                }
            }
            remaining -= best;
            members[(j - 1) as usize] = (c + 1) as u32;
            upper = c;
        }
        debug_assert_eq!(remaining, 0);
        Ok(SubsetIndex {
            members,
            ambient: n,
        })
    }

    /// Colex rank; inverse of [`SubsetIndex::unrank`].
    pub fn rank(&self) -> u128 {
        self.members
            .iter()
            .enumerate()
            .map(|(j, &s)| binomial(s as u64 - 1, j as u64 + 1).expect("rank fits u128"))
            .sum()
    }

    /// Step to the colex successor in place. Returns false (leaving the
    /// subset unchanged) when this is already the last subset.
    pub fn advance(&mut self) -> bool {
        let r = self.members.len();
        for j in 0..r {
            let limit = if j + 1 < r {
                self.members[j + 1] - 1
            } else {
                self.ambient
            };
            if self.members[j] < limit {
                self.members[j] += 1;
                for (i, m) in self.members[..j].iter_mut().enumerate() {
                    *m = i as u32 + 1;
                }
                return true;
            }
        }
        false
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The complement in {1,…,n}, also sorted.
    pub fn complement(&self) -> SubsetIndex {
        let mut members = Vec::with_capacity(self.ambient as usize - self.members.len());
        let mut it = self.members.iter().copied().peekable();
        for v in 1..=self.ambient {
            if it.peek() == Some(&v) {
                it.next();
            } else {
                members.push(v);
            }
        }
        SubsetIndex {
            members,
            ambient: self.ambient,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(5, 6).unwrap(), 0);
        assert_eq!(binomial(12, 6).unwrap(), 924);
        assert!(binomial(200, 100).is_err());
    }

    #[test]
    fn binomial_matches_biguint_product() {
        // Differential check of the u128 path against a direct exact product.
        for n in 0..=40u64 {
            for k in 0..=n {
                let mut num = BigUint::from(1u32);
                let mut den = BigUint::from(1u32);
                for i in 0..k {
                    num *= BigUint::from(n - i);
                    den *= BigUint::from(i + 1);
                }
                assert_eq!(BigUint::from(binomial(n, k).unwrap()), num / den);
            }
        }
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(SubsetIndex::unrank(0, 3, 1).unwrap().members(), &[1]);
        assert_eq!(SubsetIndex::unrank(2, 3, 2).unwrap().members(), &[2, 3]);
        assert_eq!(
            SubsetIndex::unrank(0, 5, 0).unwrap().members(),
            &[] as &[u32]
        );
    }

    #[test]
    fn unrank_rejects_out_of_range() {
        let err = SubsetIndex::unrank(3, 3, 2).unwrap_err();
        assert!(matches!(
            err,
            ParamError::SubsetRankOutOfRange { total: 3, .. }
        ));
    }

    #[test]
    fn colex_order_small() {
        // n = 4, r = 2: {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}
        let expected: &[&[u32]] = &[&[1, 2], &[1, 3], &[2, 3], &[1, 4], &[2, 4], &[3, 4]];
        for (rank, want) in expected.iter().enumerate() {
            assert_eq!(
                SubsetIndex::unrank(rank as u128, 4, 2).unwrap().members(),
                *want
            );
        }
    }

    #[test]
    fn advance_agrees_with_unrank() {
        for n in 0..=12u32 {
            for r in 0..=n {
                let total = binomial(n as u64, r as u64).unwrap();
                let mut s = SubsetIndex::unrank(0, n, r).unwrap();
                for rank in 0..total {
                    assert_eq!(s, SubsetIndex::unrank(rank, n, r).unwrap());
                    assert_eq!(s.rank(), rank);
                    let more = s.advance();
                    assert_eq!(more, rank + 1 < total);
                }
            }
        }
    }

    #[test]
    fn complement_partitions_ground_set() {
        let s = SubsetIndex::new(vec![2, 5], 6).unwrap();
        assert_eq!(s.complement().members(), &[1, 3, 4, 6]);
        let mut all: Vec<u32> = s.members().to_vec();
        all.extend_from_slice(s.complement().members());
        all.sort_unstable();
        assert_eq!(all, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn new_rejects_bad_subsets() {
        assert!(SubsetIndex::new(vec![2, 2], 4).is_err());
        assert!(SubsetIndex::new(vec![0], 4).is_err());
        assert!(SubsetIndex::new(vec![5], 4).is_err());
        assert!(SubsetIndex::new(vec![3, 1], 4).is_err());
    }
}

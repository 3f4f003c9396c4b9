//! Colexicographic ranking of k-subsets of `{0, .., n-1}`.
//!
//! The rank of `{s_0 < s_1 < .. < s_{k-1}}` is `Σ C(s_i, i + 1)`. Subsets are
//! ordered by their largest element first, so the rank of a subset does not
//! depend on `n`.

use crate::error::{Error, Result};

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Rank/unrank maps between k-subsets of `0..n` and `0..C(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetIndexer {
    n: usize,
    k: usize,
    // pascal[m][j] = C(m, j) for m <= n, j <= k
    pascal: Vec<Vec<u64>>,
}

impl SubsetIndexer {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::TokenCountOutOfRange { k, n });
        }
        if n > 64 {
            return Err(Error::BadParameters {
                family: "subset indexer".into(),
                reason: format!("n = {n} exceeds 64"),
            });
        }
        let pascal = (0..=n)
            .map(|m| (0..=k).map(|j| binomial(m, j)).collect())
            .collect();
        Ok(SubsetIndexer { n, k, pascal })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self) -> usize {
        self.pascal[self.n][self.k] as usize
    }

    /// Rank of a strictly increasing k-subset.
    pub fn rank(&self, subset: &[usize]) -> usize {
        debug_assert_eq!(subset.len(), self.k);
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        subset
            .iter()
            .enumerate()
            .map(|(i, &s)| self.pascal[s][i + 1] as usize)
            .sum()
    }

    /// Rank of the subset whose members are the set bits of `mask`.
    pub fn rank_mask(&self, mask: u64) -> usize {
        let mut rank = 0;
        let mut rest = mask;
        let mut i = 0;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rank += self.pascal[s][i + 1] as usize;
            rest &= rest - 1;
            i += 1;
        }
        rank
    }

    pub fn unrank(&self, mut rank: usize) -> Vec<usize> {
        debug_assert!(rank < self.count());
        let mut out = vec![0; self.k];
        let mut hi = self.n;
        for i in (0..self.k).rev() {
            // largest x < hi with C(x, i+1) <= rank
            let mut x = hi - 1;
            while self.pascal[x][i + 1] as usize > rank {
                x -= 1;
            }
            out[i] = x;
            rank -= self.pascal[x][i + 1] as usize;
            hi = x;
        }
        out
    }

    pub fn unrank_mask(&self, rank: usize) -> u64 {
        self.unrank(rank).into_iter().fold(0, |m, s| m | (1 << s))
    }

    /// All k-subsets in colex (rank) order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.count()).map(|r| self.unrank(r))
    }
}

/// All k-subsets of `0..n` as bitmasks, in colex order (Gosper's hack).
/// Requires `n < 64`.
pub fn colex_masks(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64, "colex_masks supports n < 64");
    let limit = 1u64 << n;
    let start = match k {
        0 => Some(0),
        k if k > n => None,
        k => Some((1u64 << k) - 1),
    };
    std::iter::successors(start, move |&m| {
        if m == 0 {
            return None;
        }
        let c = m & m.wrapping_neg();
        let r = m + c;
        let next = (((r ^ m) >> 2) / c) | r;
        (next < limit).then_some(next)
    })
}

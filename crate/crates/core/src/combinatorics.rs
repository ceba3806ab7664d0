//! Binomial coefficients and colexicographic ranking of pairs and triples.
//!
//! The colex rank of a sorted tuple `a_1 < a_2 < ... < a_r` is
//! `C(a_1, 1) + C(a_2, 2) + ... + C(a_r, r)`. Triples of `[0, n)` ranked this
//! way occupy exactly `0..C(n, 3)`, and the ranks of `[0, n)` are a prefix of
//! the ranks of `[0, n + 1)`.

use crate::error::{Error, Result};

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

#[inline]
pub fn choose2(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

#[inline]
pub fn choose3(n: u64) -> u64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Colex rank of the pair `i < j`, without range checks.
#[inline]
pub fn pair_rank_unchecked(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    i + j * (j - 1) / 2
}

/// Colex rank of the triple `i < j < k`, without range checks.
#[inline]
pub fn triple_rank_unchecked(i: usize, j: usize, k: usize) -> u64 {
    debug_assert!(i < j && j < k);
    let (i, j, k) = (i as u64, j as u64, k as u64);
    i + choose2(j) + choose3(k)
}

pub fn pair_rank(i: usize, j: usize, n: usize) -> Result<usize> {
    if j >= n {
        return Err(Error::VertexOutOfRange { vertex: j, n });
    }
    if i >= j {
        return Err(Error::InvalidPair(i, j));
    }
    Ok(pair_rank_unchecked(i, j))
}

pub fn pair_unrank(rank: usize, n: usize) -> Result<(usize, usize)> {
    let count = choose2(n as u64);
    if rank as u64 >= count {
        return Err(Error::RankOutOfRange { rank: rank as u64, count });
    }
    let j = largest_below(rank as u64, n as u64, choose2) as usize;
    Ok((rank - pair_rank_unchecked(0, j), j))
}

/// Colex rank of `i < j < k` among the triples of `[0, n)`.
pub fn triple_rank(i: usize, j: usize, k: usize, n: usize) -> Result<u64> {
    if !(i < j && j < k) {
        return Err(Error::UnsortedTriple(i, j, k));
    }
    if k >= n {
        return Err(Error::VertexOutOfRange { vertex: k, n });
    }
    Ok(triple_rank_unchecked(i, j, k))
}

/// Inverse of [`triple_rank`] over all ranks `< C(n, 3)`.
pub fn triple_unrank(rank: u64, n: usize) -> Result<(usize, usize, usize)> {
    let count = choose3(n as u64);
    if rank >= count {
        return Err(Error::RankOutOfRange { rank, count });
    }
    let k = largest_below(rank, n as u64, choose3);
    let rest = rank - choose3(k);
    let j = largest_below(rest, k, choose2);
    let i = rest - choose2(j);
    Ok((i as usize, j as usize, k as usize))
}

/// Largest `x < bound` with `f(x) <= target`, for monotone `f` with `f(0) = 0`.
fn largest_below(target: u64, bound: u64, f: fn(u64) -> u64) -> u64 {
    let (mut lo, mut hi) = (0u64, bound);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if f(mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Iterates all pairs `(i, j)` of `[0, n)` in colex order.
pub fn colex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// Iterates all triples `(i, j, k)` of `[0, n)` in colex order.
pub fn colex_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> + Clone {
    (2..n).flat_map(|k| (1..k).flat_map(move |j| (0..j).map(move |i| (i, j, k))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_colex_triples(n: usize) -> Vec<(usize, usize, usize)> {
        let mut all = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    all.push((i, j, k));
                }
            }
        }
        // colex: compare largest element first
        all.sort_by_key(|&(i, j, k)| (k, j, i));
        all
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(416, 3), choose3(416));
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(triple_rank(0, 1, 2, 3).unwrap(), 0);
        assert_eq!(triple_rank(0, 1, 3, 4).unwrap(), 1);
        assert_eq!(triple_rank(1, 2, 4, 5).unwrap(), 6);
    }

    #[test]
    fn rank_matches_enumeration() {
        for n in [4, 5, 9] {
            for (pos, &(i, j, k)) in brute_colex_triples(n).iter().enumerate() {
                assert_eq!(triple_rank(i, j, k, n).unwrap(), pos as u64);
            }
        }
        assert_eq!(brute_colex_triples(5)[6], (1, 2, 4));
    }

    #[test]
    fn rank_errors() {
        assert_eq!(triple_rank(0, 2, 1, 5), Err(Error::UnsortedTriple(0, 2, 1)));
        assert_eq!(triple_rank(1, 1, 2, 5), Err(Error::UnsortedTriple(1, 1, 2)));
        assert_eq!(triple_rank(0, 1, 5, 5), Err(Error::VertexOutOfRange { vertex: 5, n: 5 }));
        assert!(triple_unrank(10, 5).is_err());
        assert!(pair_unrank(10, 5).is_err());
    }

    #[test]
    fn unrank_inverts_rank_exhaustively() {
        for n in 0..=30usize {
            let mut expected = 0u64;
            for (i, j, k) in colex_triples(n) {
                let r = triple_rank(i, j, k, n).unwrap();
                assert_eq!(r, expected);
                assert_eq!(triple_unrank(r, n).unwrap(), (i, j, k));
                expected += 1;
            }
            assert_eq!(expected, choose3(n as u64));
        }
    }

    #[test]
    fn pair_ranks() {
        for n in 0..40usize {
            for (pos, (i, j)) in colex_pairs(n).enumerate() {
                assert_eq!(pair_rank(i, j, n).unwrap(), pos);
                assert_eq!(pair_unrank(pos, n).unwrap(), (i, j));
            }
        }
    }
}

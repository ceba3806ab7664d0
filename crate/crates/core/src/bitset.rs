//! Fixed-width bit rows over `u64` words.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1 << (i % 64));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

pub(crate) fn iter_ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            }
        })
    })
}

pub(crate) fn first_one(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().find(|(_, &w)| w != 0).map(|(wi, &w)| wi * 64 + w.trailing_zeros() as usize)
}

/// Row with bits `0..n` set.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut row = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = row.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    row
}

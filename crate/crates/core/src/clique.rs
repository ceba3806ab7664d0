//! Exact clique search on bitset adjacency.
//!
//! Branch and bound with a greedy-colouring bound: candidates are coloured
//! greedily into independent classes, and a branch is cut when the current
//! clique plus the number of colours left cannot beat the target.

use crate::bitset;
use crate::graph::Graph2;

struct Search<'a> {
    g: &'a Graph2,
    /// A clique is accepted once it has more than `floor` vertices.
    floor: usize,
    stop_at: usize,
    best: Option<Vec<usize>>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Returns true once a clique of size `stop_at` has been recorded.
    fn expand(&mut self, mut candidates: Vec<u64>) -> bool {
        let (order, colours) = colour_sort(self.g, &candidates);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colours[idx] <= self.floor {
                return false;
            }
            let v = order[idx];
            self.current.push(v);
            if self.current.len() >= self.stop_at {
                self.floor = self.current.len();
                self.best = Some(self.current.clone());
                return true;
            }
            let next: Vec<u64> = candidates.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            if bitset::is_empty(&next) {
                if self.current.len() > self.floor {
                    self.floor = self.current.len();
                    self.best = Some(self.current.clone());
                    if self.floor >= self.stop_at {
                        return true;
                    }
                }
            } else if self.expand(next) {
                return true;
            }
            self.current.pop();
            bitset::clear(&mut candidates, v);
        }
        false
    }
}

/// Greedy sequential colouring of `candidates`. Returns the vertices grouped
/// by colour class (ascending) and, per vertex, its 1-based colour number.
fn colour_sort(g: &Graph2, candidates: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut uncoloured = candidates.to_vec();
    let mut order = Vec::new();
    let mut colours = Vec::new();
    let mut colour = 0;
    while !bitset::is_empty(&uncoloured) {
        colour += 1;
        let mut available = uncoloured.clone();
        while let Some(v) = bitset::first_one(&available) {
            bitset::clear(&mut available, v);
            bitset::clear(&mut uncoloured, v);
            for (a, b) in available.iter_mut().zip(g.row(v)) {
                *a &= !b;
            }
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn search(g: &Graph2, floor: usize, stop_at: usize) -> Option<Vec<usize>> {
    let mut s = Search { g, floor, stop_at, best: None, current: Vec::new() };
    s.expand(bitset::full(g.n()));
    s.best.map(|mut c| {
        c.sort_unstable();
        c
    })
}

/// Finds a clique on `q` vertices, if one exists. The witness is sorted.
pub fn has_clique(g: &Graph2, q: usize) -> Option<Vec<usize>> {
    if q == 0 {
        return Some(Vec::new());
    }
    if q > g.n() {
        return None;
    }
    search(g, q - 1, q)
}

/// Finds an independent set on `s` vertices, if one exists.
pub fn has_independent_set(g: &Graph2, s: usize) -> Option<Vec<usize>> {
    has_clique(&g.complement(), s)
}

/// A maximum clique (sorted).
pub fn max_clique(g: &Graph2) -> Vec<usize> {
    search(g, 0, usize::MAX).unwrap_or_default()
}

pub fn clique_number(g: &Graph2) -> usize {
    max_clique(g).len()
}

pub fn independence_number(g: &Graph2) -> usize {
    clique_number(&g.complement())
}

//! Exhaustive search for a monochromatic hedgehog copy.
//!
//! Body images are chosen by backtracking; a partial assignment survives
//! only while each placed spike pair still has at least as many free
//! target-coloured completions as spikes bound to it. Spikes are then
//! assigned by bipartite matching, since spikes on one pair are
//! interchangeable.

use std::collections::BTreeMap;

use super::Embedding;
use crate::colouring::{Colour, TripleColouring};
use crate::degeneracy::degeneracy2;
use crate::hedgehog::{spike_pair_graph, Hedgehog};

struct Search<'a> {
    c: &'a TripleColouring,
    colour: Colour,
    /// Body indices in placement order.
    order: Vec<usize>,
    /// For each body index, the already-placed neighbours in `F` with the
    /// number of spikes on that pair.
    back_edges: Vec<Vec<(usize, usize)>>,
    /// Spikes as (body index, body index).
    spikes: Vec<(usize, usize)>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn free_completions(&self, a: usize, b: usize) -> usize {
        (0..self.c.n()).filter(|&w| !self.used[w] && w != a && w != b && self.c.colour(a, b, w) == self.colour).count()
    }

    fn place(&mut self, depth: usize) -> Option<Vec<usize>> {
        if depth == self.order.len() {
            return self.match_spikes();
        }
        let i = self.order[depth];
        for u in 0..self.c.n() {
            if self.used[u] {
                continue;
            }
            self.used[u] = true;
            self.image[i] = u;
            let feasible = self.back_edges[i].iter().all(|&(j, mult)| self.free_completions(u, self.image[j]) >= mult);
            if feasible {
                if let Some(found) = self.place(depth + 1) {
                    return Some(found);
                }
            }
            self.used[u] = false;
        }
        self.image[i] = usize::MAX;
        None
    }

    /// Kuhn's augmenting-path matching of spikes to free host vertices.
    fn match_spikes(&self) -> Option<Vec<usize>> {
        let candidates: Vec<Vec<usize>> = self
            .spikes
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.image[i], self.image[j]);
                (0..self.c.n()).filter(|&w| !self.used[w] && self.c.colour(a, b, w) == self.colour).collect()
            })
            .collect();
        let mut owner: Vec<Option<usize>> = vec![None; self.c.n()];
        for s in 0..self.spikes.len() {
            let mut visited = vec![false; self.c.n()];
            if !augment(s, &candidates, &mut owner, &mut visited) {
                return None;
            }
        }
        let mut assignment = vec![usize::MAX; self.spikes.len()];
        for (w, o) in owner.iter().enumerate() {
            if let Some(s) = *o {
                assignment[s] = w;
            }
        }
        Some(assignment)
    }
}

fn augment(s: usize, candidates: &[Vec<usize>], owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &w in &candidates[s] {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if owner[w].is_none_or(|t| augment(t, candidates, owner, visited)) {
            owner[w] = Some(s);
            return true;
        }
    }
    false
}

/// Exact search for a copy of `h` with every edge of `colour`. Returns
/// `None` iff no copy exists (including when the host has fewer than
/// `n_total` vertices).
pub fn find_mono_copy_exact(c: &TripleColouring, h: &Hedgehog, colour: Colour) -> Option<Embedding> {
    if h.n_total() > c.n() {
        return None;
    }
    let f = spike_pair_graph(h);
    let order: Vec<usize> = degeneracy2(&f).order.into_iter().rev().collect();
    let index: BTreeMap<usize, usize> = h.body().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut position = vec![0; order.len()];
    for (p, &i) in order.iter().enumerate() {
        position[i] = p;
    }
    let mut back_edges = vec![Vec::new(); order.len()];
    for ((a, b), mult) in h.pair_multiplicities() {
        let (i, j) = (index[&a], index[&b]);
        let (early, late) = if position[i] < position[j] { (i, j) } else { (j, i) };
        back_edges[late].push((early, mult));
    }
    let spikes = h.spikes().iter().map(|s| (index[&s.pair.0], index[&s.pair.1])).collect();
    let mut search = Search {
        c,
        colour,
        order,
        back_edges,
        spikes,
        image: vec![usize::MAX; h.body().len()],
        used: vec![false; c.n()],
    };
    let assignment = search.place(0)?;
    let mut map: BTreeMap<usize, usize> = h.body().iter().copied().zip(search.image.iter().copied()).collect();
    for (s, w) in h.spikes().iter().zip(assignment) {
        map.insert(s.vertex, w);
    }
    Some(Embedding { map, colour })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::derive_colouring;
    use crate::embedding::verify_embedding;
    use crate::graph::Graph2;
    use crate::hedgehog::{build_hstar, standard_hedgehog, HStarParams, Spike};

    #[test]
    fn single_edge() {
        let c = TripleColouring::monochromatic(3, Colour::Red);
        let e = standard_hedgehog(2).unwrap();
        let found = find_mono_copy_exact(&c, &e, Colour::Red).unwrap();
        assert!(verify_embedding(&c, &e, Colour::Red, &found));
        assert!(find_mono_copy_exact(&c, &e, Colour::Blue).is_none());
    }

    #[test]
    fn host_too_small() {
        let c = derive_colouring(&Graph2::cycle(5));
        let h = build_hstar(&HStarParams { b: 3, k: 3, m: 5, n_total: 21 }).unwrap();
        assert!(find_mono_copy_exact(&c, &h, Colour::Red).is_none());
        assert!(find_mono_copy_exact(&c, &h, Colour::Blue).is_none());
    }

    #[test]
    fn spikes_share_candidates() {
        // Pair {0,1} completes to 3, 4, 5 and pair {0,2} only to 3. Giving
        // the {0,1} spikes the first free candidates would strand the {0,2}
        // spike.
        let h = Hedgehog::new(vec![0, 1, 2], vec![Spike::new(3, 0, 1), Spike::new(4, 0, 1), Spike::new(5, 0, 2)], 6)
            .unwrap();
        let red = [[0, 1, 3], [0, 1, 4], [0, 1, 5], [0, 2, 3]];
        let c = TripleColouring::from_fn(6, |i, j, k| red.contains(&[i, j, k]));
        let e = find_mono_copy_exact(&c, &h, Colour::Red).unwrap();
        assert!(verify_embedding(&c, &h, Colour::Red, &e));
    }

    #[test]
    fn blue_copies_in_derived_host() {
        // Blue triples of the colouring derived from K_4 plus two isolated
        // vertices are exactly {x, 4, 5} with x < 4.
        let gamma = Graph2::from_edges(6, crate::combinatorics::colex_pairs(4)).unwrap();
        let c = derive_colouring(&gamma);
        let s = standard_hedgehog(2).unwrap();
        let e = find_mono_copy_exact(&c, &s, Colour::Blue).unwrap();
        assert!(verify_embedding(&c, &s, Colour::Blue, &e));
        // two edges of a standard hedgehog share one vertex, but every blue
        // triple contains both 4 and 5
        let s3 = standard_hedgehog(3).unwrap();
        assert!(find_mono_copy_exact(&c, &s3, Colour::Blue).is_none());
        assert!(find_mono_copy_exact(&c, &s3, Colour::Red).is_some());
    }
}

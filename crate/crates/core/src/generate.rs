//! Seeded generators for test inputs and experiments.

use crate::combinatorics::colex_pairs;
use crate::hedgehog::{Hedgehog, Spike};
use crate::hypergraph::Hypergraph3;
use crate::rng::SplitMix64;

/// Random canonical hedgehog on exactly `n_total >= 3` vertices.
///
/// Half the draws use a body of about `sqrt(2 n_total)` vertices with spikes
/// spread over distinct pairs first, which makes the spike-pair graph dense;
/// the rest pick any body size and bind spikes to uniform pairs.
pub fn random_hedgehog(n_total: usize, rng: &mut SplitMix64) -> Hedgehog {
    assert!(n_total >= 3, "a hedgehog with a spike needs 3 vertices");
    let dense = rng.below(2) == 0;
    let b = if dense {
        let cap = ((2 * n_total) as f64).sqrt() as usize + 1;
        rng.range_inclusive(2, cap.clamp(2, n_total - 1))
    } else {
        rng.range_inclusive(2, n_total - 1)
    };
    let mut pairs: Vec<(usize, usize)> = colex_pairs(b).collect();
    let spikes = (0..n_total - b)
        .map(|j| {
            let (u, v) = if dense {
                if j % pairs.len() == 0 {
                    rng.shuffle(&mut pairs);
                }
                pairs[j % pairs.len()]
            } else {
                pairs[rng.below(pairs.len())]
            };
            Spike::new(b + j, u, v)
        })
        .collect();
    Hedgehog::new((0..b).collect(), spikes, n_total).expect("generated hedgehog is valid")
}

/// Random 1-degenerate 3-graph without isolated vertices on between 3 and
/// `max_vertices` vertices, grown by gluing hedgehogs: each round picks a
/// small body from existing and fresh vertices and attaches fresh spikes to
/// its pairs. Every edge owns a vertex that was new when the edge was added.
pub fn random_one_degenerate(max_vertices: usize, rng: &mut SplitMix64) -> Hypergraph3 {
    assert!(max_vertices >= 3);
    let target = rng.range_inclusive(3, max_vertices);
    let mut n = 0usize;
    let mut edges = Vec::new();
    'rounds: loop {
        // Body slots: Some(existing vertex) or None for a fresh vertex that is
        // allocated on first use.
        let size = rng.range_inclusive(2, 5);
        let mut slots: Vec<Option<usize>> = Vec::with_capacity(size);
        for _ in 0..size {
            let slot = if n > 0 && rng.below(3) != 0 { Some(rng.below(n)) } else { None };
            if slot.is_none() || !slots.contains(&slot) {
                slots.push(slot);
            }
        }
        if slots.len() < 2 {
            continue;
        }
        let spikes = rng.range_inclusive(1, 6);
        for _ in 0..spikes {
            let a = rng.below(slots.len());
            let mut b = rng.below(slots.len() - 1);
            if b >= a {
                b += 1;
            }
            let fresh = 1 + usize::from(slots[a].is_none()) + usize::from(slots[b].is_none());
            if n + fresh > target {
                break 'rounds;
            }
            let mut resolve = |i: usize, n: &mut usize| {
                *slots[i].get_or_insert_with(|| {
                    *n += 1;
                    *n - 1
                })
            };
            let (u, v) = (resolve(a, &mut n), resolve(b, &mut n));
            edges.push([u, v, n]);
            n += 1;
        }
    }
    let mut labels: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut labels);
    Hypergraph3::new(n, edges.into_iter().map(|e| e.map(|v| labels[v]))).expect("generated edges are valid")
}

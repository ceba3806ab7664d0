//! Degeneracy via iterated minimum-degree deletion.
//!
//! Removal always takes the smallest-id vertex among those of minimum current
//! degree. For 3-graphs an edge disappears as soon as any of its endpoints is
//! removed, so the process runs over vertex-induced subhypergraphs.

use crate::graph::Graph2;
use crate::hypergraph::Hypergraph3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyResult {
    /// Largest minimum degree met during removal.
    pub value: usize,
    /// Vertices in removal order: each has at most `value` incident edges
    /// among itself and the vertices after it.
    pub order: Vec<usize>,
}

fn peel<F>(mut degrees: Vec<usize>, mut on_remove: F) -> DegeneracyResult
where
    F: FnMut(usize, &mut [usize], &[bool]),
{
    let n = degrees.len();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut value = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degrees[v], v)).expect("a vertex remains");
        value = value.max(degrees[v]);
        removed[v] = true;
        order.push(v);
        on_remove(v, &mut degrees, &removed);
    }
    DegeneracyResult { value, order }
}

pub fn degeneracy2(g: &Graph2) -> DegeneracyResult {
    peel(g.degrees(), |v, degrees, removed| {
        for w in g.neighbours(v) {
            if !removed[w] {
                degrees[w] -= 1;
            }
        }
    })
}

pub fn degeneracy3(h: &Hypergraph3) -> DegeneracyResult {
    let mut alive = vec![true; h.edge_count()];
    let degrees = (0..h.n()).map(|v| h.incident(v).len()).collect();
    peel(degrees, |v, degrees, _| {
        for &e in h.incident(v) {
            if alive[e] {
                alive[e] = false;
                for &w in &h.edges()[e] {
                    if w != v {
                        degrees[w] -= 1;
                    }
                }
            }
        }
    })
}

/// Replays `order` on `g` and returns the largest number of later
/// neighbours seen.
pub fn replay_order2(g: &Graph2, order: &[usize]) -> usize {
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order.iter().map(|&v| g.neighbours(v).filter(|&w| position[w] > position[v]).count()).max().unwrap_or(0)
}

/// Replays `order` on `h`: for each vertex, counts edges whose other
/// endpoints all come later.
pub fn replay_order3(h: &Hypergraph3, order: &[usize]) -> usize {
    let mut position = vec![0; h.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| h.incident(v).iter().filter(|&&e| h.edges()[e].iter().all(|&w| position[w] >= position[v])).count())
        .max()
        .unwrap_or(0)
}

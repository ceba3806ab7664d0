//! Generalised hedgehogs: a body `B` and spikes `S`, each spike forming a
//! single edge with one pair of body vertices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::combinatorics::colex_pairs;
use crate::degeneracy::degeneracy3;
use crate::error::{Error, Result};
use crate::graph::Graph2;
use crate::hypergraph::{Hypergraph3, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spike {
    pub vertex: usize,
    /// Body pair, smaller id first.
    pub pair: (usize, usize),
}

impl Spike {
    pub fn new(vertex: usize, a: usize, b: usize) -> Self {
        Self { vertex, pair: (a.min(b), a.max(b)) }
    }

    pub fn edge(&self) -> Triple {
        let mut t = [self.pair.0, self.pair.1, self.vertex];
        t.sort_unstable();
        t
    }
}

/// Why a vertex set fails to be a hedgehog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HedgehogViolation {
    #[error("body vertex {vertex} out of range for {n} vertices")]
    BodyOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("edge {edge:?} has {body_vertices} body vertices (expected 2)")]
    EdgeBodyCount { edge: Triple, body_vertices: usize },
    #[error("spike {vertex} lies in {degree} edges (expected 1)")]
    SpikeDegree { vertex: usize, degree: usize },
    #[error("spike {vertex} is bound to invalid pair {pair:?}")]
    BadPair { vertex: usize, pair: (usize, usize) },
    #[error("{needed} vertices do not fit in n_total = {n_total}")]
    TooManyVertices { needed: usize, n_total: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hedgehog {
    body: Vec<usize>,
    spikes: Vec<Spike>,
    n_total: usize,
}

impl Hedgehog {
    /// Spikes are stored sorted by spike vertex. `n_total` may exceed
    /// `|body| + |spikes|`; the surplus counts as isolated padding.
    pub fn new(body: Vec<usize>, mut spikes: Vec<Spike>, n_total: usize) -> Result<Self, HedgehogViolation> {
        let mut seen = BTreeSet::new();
        for &v in &body {
            if !seen.insert(v) {
                return Err(HedgehogViolation::DuplicateVertex(v));
            }
        }
        let body_set: BTreeSet<usize> = body.iter().copied().collect();
        for s in spikes.iter_mut() {
            *s = Spike::new(s.vertex, s.pair.0, s.pair.1);
            if !seen.insert(s.vertex) {
                return Err(HedgehogViolation::DuplicateVertex(s.vertex));
            }
            let (a, b) = s.pair;
            if a == b || !body_set.contains(&a) || !body_set.contains(&b) {
                return Err(HedgehogViolation::BadPair { vertex: s.vertex, pair: s.pair });
            }
        }
        let needed = body.len() + spikes.len();
        if needed > n_total {
            return Err(HedgehogViolation::TooManyVertices { needed, n_total });
        }
        spikes.sort_unstable();
        Ok(Self { body, spikes, n_total })
    }

    pub fn body(&self) -> &[usize] {
        &self.body
    }

    pub fn spikes(&self) -> &[Spike] {
        &self.spikes
    }

    pub fn n_total(&self) -> usize {
        self.n_total
    }

    /// Body plus spike vertices, excluding padding.
    pub fn vertex_count(&self) -> usize {
        self.body.len() + self.spikes.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Triple> + '_ {
        self.spikes.iter().map(Spike::edge)
    }

    /// Number of spikes bound to each body pair.
    pub fn pair_multiplicities(&self) -> BTreeMap<(usize, usize), usize> {
        let mut counts = BTreeMap::new();
        for s in &self.spikes {
            *counts.entry(s.pair).or_insert(0) += 1;
        }
        counts
    }

    /// True when body ids are `0..b` in order and spike ids are `b..b+s`.
    pub fn is_canonical(&self) -> bool {
        self.body.iter().enumerate().all(|(i, &v)| i == v)
            && self.spikes.iter().enumerate().all(|(i, s)| s.vertex == self.body.len() + i)
    }

    /// Relabels body vertex `body[i]` to `i` and the `j`-th spike to `b + j`.
    pub fn canonical(&self) -> Hedgehog {
        let index: BTreeMap<usize, usize> = self.body.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let b = self.body.len();
        let spikes = self
            .spikes
            .iter()
            .enumerate()
            .map(|(j, s)| Spike::new(b + j, index[&s.pair.0], index[&s.pair.1]))
            .collect();
        Hedgehog::new((0..b).collect(), spikes, self.n_total).expect("relabelling preserves validity")
    }
}

impl fmt::Display for Hedgehog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "body={:?} spikes=[", self.body)?;
        for (i, s) in self.spikes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}-{}", s.vertex, s.pair.0, s.pair.1)?;
        }
        write!(f, "] n_total={}", self.n_total)
    }
}

/// One spike on every pair of a `b`-vertex body. Body ids are `0..b`,
/// spikes follow in colex pair order.
pub fn standard_hedgehog(b: usize) -> Result<Hedgehog> {
    if b < 2 {
        return Err(Error::InvalidParams(format!("body size {b} < 2")));
    }
    let spikes: Vec<Spike> = colex_pairs(b).enumerate().map(|(idx, (u, v))| Spike::new(b + idx, u, v)).collect();
    let n_total = b + spikes.len();
    Ok(Hedgehog::new((0..b).collect(), spikes, n_total)?)
}

/// Parameters of the lower-bound hedgehog: body size `b`, heavy core of the
/// first `k` body vertices, `m` extra spikes per heavy pair, `n_total`
/// vertices in all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HStarParams {
    pub b: usize,
    pub k: usize,
    pub m: usize,
    pub n_total: usize,
}

impl HStarParams {
    /// Body, base spikes and heavy spikes before padding.
    pub fn required_vertices(&self) -> u64 {
        let (b, k, m) = (self.b as u64, self.k as u64, self.m as u64);
        b + b * b.saturating_sub(1) / 2 + k * k.saturating_sub(1) / 2 * m
    }

    /// Checks `b >= 2` and `1 <= k <= b`; ignores the vertex budget.
    pub fn validate_shape(&self) -> Result<()> {
        if self.b < 2 {
            return Err(Error::InvalidParams(format!("b = {} < 2", self.b)));
        }
        if self.k < 1 || self.k > self.b {
            return Err(Error::InvalidParams(format!("k = {} must lie in 1..={}", self.k, self.b)));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_shape()?;
        let needed = self.required_vertices();
        if needed > self.n_total as u64 {
            return Err(Error::InvalidParams(format!(
                "budget violated: b + C(b,2) + C(k,2)*m = {needed} > n_total = {}",
                self.n_total
            )));
        }
        Ok(())
    }
}

/// Builds the lower-bound hedgehog: a spike on every body pair, `m` more on
/// every pair inside the first `k` body vertices, then padding spikes
/// assigned round-robin over all body pairs in colex order until `n_total`
/// vertices exist.
pub fn build_hstar(p: &HStarParams) -> Result<Hedgehog> {
    p.validate()?;
    let b = p.b;
    let mut spikes = Vec::with_capacity(p.n_total - b);
    let mut next = b;
    let mut attach = |u: usize, v: usize, spikes: &mut Vec<Spike>| {
        spikes.push(Spike::new(next, u, v));
        next += 1;
    };
    for (u, v) in colex_pairs(b) {
        attach(u, v, &mut spikes);
    }
    for (u, v) in colex_pairs(p.k) {
        for _ in 0..p.m {
            attach(u, v, &mut spikes);
        }
    }
    let mut round_robin = colex_pairs(b).cycle();
    while b + spikes.len() < p.n_total {
        let (u, v) = round_robin.next().expect("b >= 2 gives at least one pair");
        attach(u, v, &mut spikes);
    }
    Ok(Hedgehog::new((0..b).collect(), spikes, p.n_total)?)
}

/// Lower-bound parameters at size `n`: `b = floor(sqrt(n)/50)`, `k = 10`,
/// `m = floor(n/100)`, `n_total = n`.
pub fn paper_hstar_params(n: usize) -> Result<HStarParams> {
    let p = HStarParams { b: (n as u64).isqrt() as usize / 50, k: 10, m: n / 100, n_total: n };
    if p.b < p.k {
        return Err(Error::InvalidParams(format!("n = {n} gives body size {} < heavy core size 10", p.b)));
    }
    p.validate()?;
    Ok(p)
}

/// Checks that `h` is a generalised hedgehog with the given body. Spikes are
/// the non-body vertices of positive degree; `n_total` is `h.n()`.
pub fn validate_hedgehog(h: &Hypergraph3, body: &[usize]) -> Result<Hedgehog, HedgehogViolation> {
    let mut in_body = vec![false; h.n()];
    for &v in body {
        if v >= h.n() {
            return Err(HedgehogViolation::BodyOutOfRange { vertex: v, n: h.n() });
        }
        if in_body[v] {
            return Err(HedgehogViolation::DuplicateVertex(v));
        }
        in_body[v] = true;
    }
    for e in h.edges() {
        let body_vertices = e.iter().filter(|&&v| in_body[v]).count();
        if body_vertices != 2 {
            return Err(HedgehogViolation::EdgeBodyCount { edge: *e, body_vertices });
        }
    }
    let mut spikes = Vec::new();
    for e in h.edges() {
        let spike = *e.iter().find(|&&v| !in_body[v]).expect("one non-body vertex");
        let degree = h.incident(spike).len();
        if degree != 1 {
            return Err(HedgehogViolation::SpikeDegree { vertex: spike, degree });
        }
        let mut pair = e.iter().filter(|&&v| in_body[v]);
        let (a, b) = (*pair.next().unwrap(), *pair.next().unwrap());
        spikes.push(Spike::new(spike, a, b));
    }
    Hedgehog::new(body.to_vec(), spikes, h.n())
}

/// The graph on body positions whose edges are the pairs carrying at least
/// one spike. Vertex `i` of the result is `h.body()[i]`.
pub fn spike_pair_graph(h: &Hedgehog) -> Graph2 {
    let index: BTreeMap<usize, usize> = h.body.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut f = Graph2::new(h.body.len());
    for s in &h.spikes {
        f.insert(index[&s.pair.0], index[&s.pair.1]);
    }
    f
}

/// The hedgehog's edge set on `max(n_total, largest id + 1)` vertices.
pub fn to_hypergraph(h: &Hedgehog) -> Hypergraph3 {
    let max_id = h.body.iter().chain(h.spikes.iter().map(|s| &s.vertex)).max().map_or(0, |&v| v + 1);
    Hypergraph3::new(h.n_total.max(max_id), h.edges()).expect("hedgehog edges are valid triples")
}

/// Splits a 1-degenerate 3-graph into edge-disjoint hedgehogs by repeatedly
/// peeling every edge that touches a current degree-one vertex.
///
/// In each round the smallest degree-one vertex of such an edge is its
/// spike; the edge's other two vertices join that round's body. The rounds
/// are returned in order.
pub fn decompose_hedgehogs(h: &Hypergraph3) -> Result<Vec<Hedgehog>> {
    let isolated = h.isolated_vertices();
    if !isolated.is_empty() {
        return Err(Error::IsolatedVertices(isolated));
    }
    let d = degeneracy3(h).value;
    if d > 1 {
        return Err(Error::NotOneDegenerate(d));
    }
    let mut alive = vec![true; h.edge_count()];
    let mut degree: Vec<usize> = (0..h.n()).map(|v| h.incident(v).len()).collect();
    let mut remaining = h.edge_count();
    let mut parts = Vec::new();
    while remaining > 0 {
        let mut body = BTreeSet::new();
        let mut spikes = Vec::new();
        let mut peeled = Vec::new();
        for (id, e) in h.edges().iter().enumerate() {
            if !alive[id] {
                continue;
            }
            if let Some(&spike) = e.iter().find(|&&v| degree[v] == 1) {
                let mut others = e.iter().copied().filter(|&v| v != spike);
                let (a, b) = (others.next().unwrap(), others.next().unwrap());
                body.insert(a);
                body.insert(b);
                spikes.push(Spike::new(spike, a, b));
                peeled.push(id);
            }
        }
        // 1-degeneracy guarantees progress on the remaining edges.
        debug_assert!(!peeled.is_empty());
        if peeled.is_empty() {
            return Err(Error::NotOneDegenerate(2));
        }
        for id in peeled {
            alive[id] = false;
            remaining -= 1;
            for &v in &h.edges()[id] {
                degree[v] -= 1;
            }
        }
        let n_total = body.len() + spikes.len();
        parts.push(Hedgehog::new(body.into_iter().collect(), spikes, n_total)?);
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::degeneracy2;

    #[test]
    fn standard_examples() {
        let h = standard_hedgehog(2).unwrap();
        assert_eq!((h.n_total(), h.spikes().len()), (3, 1));
        let h = standard_hedgehog(4).unwrap();
        assert_eq!((h.n_total(), h.spikes().len()), (10, 6));
        let h = standard_hedgehog(3).unwrap();
        assert_eq!(h.spikes(), &[Spike::new(3, 0, 1), Spike::new(4, 0, 2), Spike::new(5, 1, 2)]);
        assert!(standard_hedgehog(1).is_err());
    }

    #[test]
    fn hstar_small() {
        let h = build_hstar(&HStarParams { b: 3, k: 2, m: 2, n_total: 10 }).unwrap();
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(h.spikes().len(), 7);
        // base + heavy spikes occupy ids 3..8
        let before_padding = h.spikes().iter().filter(|s| s.vertex < 8 && s.pair == (0, 1)).count();
        assert_eq!(before_padding, 3);
        assert_eq!(h.pair_multiplicities()[&(0, 1)], 4);
        assert_eq!(h.pair_multiplicities()[&(0, 2)], 2);
        assert_eq!(h.pair_multiplicities()[&(1, 2)], 1);

        let single = build_hstar(&HStarParams { b: 2, k: 1, m: 0, n_total: 3 }).unwrap();
        assert_eq!(single.edges().collect::<Vec<_>>(), vec![[0, 1, 2]]);
    }

    #[test]
    fn hstar_budget() {
        let p = HStarParams { b: 20, k: 10, m: 10_000, n_total: 1_000_000 };
        assert_eq!(p.required_vertices(), 450_210);
        assert!(p.required_vertices() <= 500_000);
        assert!(HStarParams { b: 3, k: 3, m: 5, n_total: 15 }.validate().is_err());
        assert!(build_hstar(&HStarParams { b: 3, k: 4, m: 0, n_total: 10 }).is_err());
    }

    #[test]
    fn paper_params() {
        assert_eq!(paper_hstar_params(1_000_000).unwrap(), HStarParams { b: 20, k: 10, m: 10_000, n_total: 1_000_000 });
        assert_eq!(paper_hstar_params(250_000).unwrap(), HStarParams { b: 10, k: 10, m: 2_500, n_total: 250_000 });
        assert!(paper_hstar_params(100).is_err());
        assert!(paper_hstar_params(249_999).is_err());
    }

    #[test]
    fn large_scale_hstar_heavy_pairs() {
        let p = paper_hstar_params(250_000).unwrap();
        let h = build_hstar(&p).unwrap();
        assert_eq!(h.vertex_count(), 250_000);
        let mult = h.pair_multiplicities();
        assert_eq!(mult.len(), 45);
        assert!(mult.values().all(|&c| c > p.m));
    }

    #[test]
    fn validate_examples() {
        let h = Hypergraph3::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let hh = validate_hedgehog(&h, &[0, 1]).unwrap();
        assert_eq!(hh.spikes().iter().map(|s| s.vertex).collect::<Vec<_>>(), vec![2, 3]);

        let h = Hypergraph3::new(5, [[0, 1, 2], [2, 3, 4]]).unwrap();
        let hh = validate_hedgehog(&h, &[0, 2, 3]).unwrap();
        assert_eq!(hh.spikes().iter().map(|s| s.vertex).collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(
            validate_hedgehog(&h, &[0, 1, 3]),
            Err(HedgehogViolation::EdgeBodyCount { edge: [2, 3, 4], body_vertices: 1 })
        );
    }

    #[test]
    fn validate_rejects_shared_spike() {
        let h = Hypergraph3::new(5, [[0, 1, 4], [2, 3, 4]]).unwrap();
        assert_eq!(validate_hedgehog(&h, &[0, 1, 2, 3]), Err(HedgehogViolation::SpikeDegree { vertex: 4, degree: 2 }));
        assert_eq!(validate_hedgehog(&h, &[0, 7]), Err(HedgehogViolation::BodyOutOfRange { vertex: 7, n: 5 }));
    }

    #[test]
    fn spike_pair_graphs() {
        assert_eq!(spike_pair_graph(&standard_hedgehog(4).unwrap()), Graph2::complete(4));
        let h = build_hstar(&HStarParams { b: 3, k: 2, m: 2, n_total: 10 }).unwrap();
        assert_eq!(spike_pair_graph(&h), Graph2::complete(3));
        assert_eq!(spike_pair_graph(&standard_hedgehog(2).unwrap()), Graph2::complete(2));
        assert!(degeneracy2(&spike_pair_graph(&h)).value as f64 <= 2.0 * (h.n_total() as f64).sqrt());
    }

    #[test]
    fn to_hypergraph_examples() {
        let h = to_hypergraph(&standard_hedgehog(2).unwrap());
        assert_eq!(h.edges(), &[[0, 1, 2]]);
        let h = to_hypergraph(&standard_hedgehog(3).unwrap());
        assert_eq!((h.n(), h.edge_count()), (6, 3));
    }

    #[test]
    fn decompose_examples() {
        let h = Hypergraph3::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let parts = decompose_hedgehogs(&h).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].body(), &[0, 1]);
        assert_eq!(parts[0].spikes().iter().map(|s| s.vertex).collect::<Vec<_>>(), vec![2, 3]);

        let path = Hypergraph3::new(5, [[0, 1, 2], [1, 2, 3], [2, 3, 4]]).unwrap();
        let parts = decompose_hedgehogs(&path).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].spikes(), &[Spike::new(0, 1, 2), Spike::new(4, 2, 3)]);
        assert_eq!(parts[1].spikes(), &[Spike::new(1, 2, 3)]);

        let empty = Hypergraph3::new(0, []).unwrap();
        assert!(decompose_hedgehogs(&empty).unwrap().is_empty());
    }

    #[test]
    fn decompose_errors() {
        let k5 = Hypergraph3::complete(5);
        assert_eq!(decompose_hedgehogs(&k5), Err(Error::NotOneDegenerate(6)));
        let h = Hypergraph3::new(4, [[0, 1, 2]]).unwrap();
        assert_eq!(decompose_hedgehogs(&h), Err(Error::IsolatedVertices(vec![3])));
    }
}

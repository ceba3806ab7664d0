//! Constructive embedding of a monochromatic hedgehog.
//!
//! With thresholds `n` the scarce-pair graph is built, vertices are marked
//! by red scarce degree against `2n`, and the majority class `V1` receives
//! the body of the hedgehog of the majority colour. Body vertices are placed
//! so that no spike pair lands on a scarce pair of the target colour; every
//! such pair then lies in at least `n` target-coloured triples, which leaves
//! room to place spikes greedily.

use std::collections::BTreeMap;
use std::fmt;

use super::aux::{build_aux_graph, mark_vertices};
use super::{verify_embedding, Embedding};
use crate::colouring::{Colour, TripleColouring};
use crate::degeneracy::degeneracy2;
use crate::error::{Error, Result};
use crate::hedgehog::{spike_pair_graph, Hedgehog};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedStage {
    Body,
    Spike,
}

impl fmt::Display for EmbedStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbedStage::Body => "body",
            EmbedStage::Spike => "spike",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfrSuccess {
    pub embedding: Embedding,
    pub v1_size: usize,
    /// Degeneracy of the target's spike-pair graph.
    pub degeneracy: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfrFailure {
    pub stage: EmbedStage,
    pub colour: Colour,
    /// Hedgehog vertex that could not be placed.
    pub vertex: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CfrOutcome {
    Embedded(CfrSuccess),
    Failed(CfrFailure),
}

impl CfrOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            CfrOutcome::Embedded(s) => Some(&s.embedding),
            CfrOutcome::Failed(_) => None,
        }
    }
}

/// Embeds `h_red` in red or `h_blue` in blue, depending on the majority
/// mark. Below the guaranteed host size (`10 n^{3/2}`) a structured failure
/// may be returned instead.
pub fn cfr_embed(c: &TripleColouring, h_red: &Hedgehog, h_blue: &Hedgehog, n: usize) -> Result<CfrOutcome> {
    for h in [h_red, h_blue] {
        if h.n_total() > n {
            return Err(Error::InvalidParams(format!("hedgehog has {} vertices, more than n = {n}", h.n_total())));
        }
        if h.n_total() > c.n() {
            return Err(Error::SizeMismatch { expected: h.n_total(), actual: c.n() });
        }
    }
    let d = n.max(1);
    let aux = build_aux_graph(c, d, d)?;
    let marking = mark_vertices(&aux, 2 * n);
    let colour = marking.majority;
    let target = match colour {
        Colour::Red => h_red,
        Colour::Blue => h_blue,
    };
    let scarce = aux.pairs(colour);

    let f = spike_pair_graph(target);
    let degeneracy = degeneracy2(&f);
    let body = target.body();
    let mut image = vec![usize::MAX; body.len()];
    let mut used = vec![false; c.n()];

    // Reverse removal order: each vertex has at most D placed F-neighbours.
    for &i in degeneracy.order.iter().rev() {
        let placed: Vec<usize> = f.neighbours(i).filter(|&j| image[j] != usize::MAX).map(|j| image[j]).collect();
        let choice = marking.v1.iter().copied().find(|&u| !used[u] && placed.iter().all(|&w| !scarce.has_edge(u, w)));
        match choice {
            Some(u) => {
                image[i] = u;
                used[u] = true;
            }
            None => {
                return Ok(CfrOutcome::Failed(CfrFailure {
                    stage: EmbedStage::Body,
                    colour,
                    vertex: body[i],
                    detail: format!(
                        "no unused vertex of V1 (|V1| = {}) avoids {colour} scarce pairs to {} placed neighbours",
                        marking.v1.len(),
                        placed.len()
                    ),
                }))
            }
        }
    }

    let mut map: BTreeMap<usize, usize> = body.iter().copied().zip(image.iter().copied()).collect();
    for s in target.spikes() {
        let (a, b) = (map[&s.pair.0], map[&s.pair.1]);
        let choice = (0..c.n()).find(|&w| !used[w] && w != a && w != b && c.colour(a, b, w) == colour);
        match choice {
            Some(w) => {
                used[w] = true;
                map.insert(s.vertex, w);
            }
            None => {
                return Ok(CfrOutcome::Failed(CfrFailure {
                    stage: EmbedStage::Spike,
                    colour,
                    vertex: s.vertex,
                    detail: format!("no unused vertex completes ({a}, {b}) to a {colour} triple"),
                }))
            }
        }
    }

    let embedding = Embedding { map, colour };
    debug_assert!(verify_embedding(c, target, colour, &embedding));
    Ok(CfrOutcome::Embedded(CfrSuccess { embedding, v1_size: marking.v1.len(), degeneracy: degeneracy.value }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::derive_colouring;
    use crate::graph::Graph2;
    use crate::hedgehog::{build_hstar, standard_hedgehog, HStarParams};

    #[test]
    fn all_red_host() {
        let c = TripleColouring::monochromatic(20, Colour::Red);
        let h = build_hstar(&HStarParams { b: 4, k: 3, m: 2, n_total: 18 }).unwrap();
        let out = cfr_embed(&c, &h, &standard_hedgehog(3).unwrap(), 18).unwrap();
        let e = out.embedding().expect("embedded");
        assert_eq!(e.colour, Colour::Red);
        assert!(verify_embedding(&c, &h, Colour::Red, e));
    }

    #[test]
    fn all_blue_host() {
        let c = TripleColouring::monochromatic(20, Colour::Blue);
        let h = standard_hedgehog(3).unwrap();
        let out = cfr_embed(&c, &standard_hedgehog(2).unwrap(), &h, 6).unwrap();
        let e = out.embedding().expect("embedded");
        assert_eq!(e.colour, Colour::Blue);
        assert!(verify_embedding(&c, &h, Colour::Blue, e));
    }

    #[test]
    fn small_triangle_host_fails_in_body() {
        // With thresholds n = 6 on a 6-vertex host every pair lies in at most
        // 4 triples, so every pair is scarce in both colours.
        let mut gamma = Graph2::new(6);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            gamma.add_edge(u, v).unwrap();
        }
        let c = derive_colouring(&gamma);
        let h = standard_hedgehog(3).unwrap();
        match cfr_embed(&c, &h, &h, 6).unwrap() {
            CfrOutcome::Failed(f) => {
                assert_eq!(f.stage, EmbedStage::Body);
                assert_eq!(f.colour, Colour::Red);
            }
            other => panic!("unexpected {other:?}"),
        }
        // The copy exists; exact search finds it.
        let e = super::super::find_mono_copy_exact(&c, &h, Colour::Red).unwrap();
        let mut body: Vec<usize> = h.body().iter().map(|v| e.map[v]).collect();
        body.sort_unstable();
        assert_eq!(body, vec![0, 1, 2]);
    }

    #[test]
    fn size_errors() {
        let c = TripleColouring::monochromatic(5, Colour::Red);
        let h = standard_hedgehog(3).unwrap();
        assert!(cfr_embed(&c, &h, &h, 5).is_err());
        assert!(cfr_embed(&c, &h, &h, 6).is_err());
    }
}

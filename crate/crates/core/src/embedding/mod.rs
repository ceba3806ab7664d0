//! Monochromatic hedgehog embeddings: the scarce-pair auxiliary graph, the
//! constructive degeneracy-order embedding, exact search and tiny Ramsey
//! numbers.

mod aux;
mod cfr;
mod exact;
mod ramsey;

use std::collections::BTreeMap;

pub use aux::{build_aux_graph, check_lemma4, mark_vertices, AuxGraph, Lemma4Report, VertexDichotomy, VertexMarking};
pub use cfr::{cfr_embed, CfrFailure, CfrOutcome, CfrSuccess, EmbedStage};
pub use exact::find_mono_copy_exact;
pub use ramsey::{ramsey_exact, ramsey_number, RamseyOutcome, MAX_EXHAUSTIVE_TRIPLES};

use crate::colouring::{Colour, TripleColouring};
use crate::hedgehog::Hedgehog;

/// Injective map from hedgehog vertices (body and spikes) into a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: BTreeMap<usize, usize>,
    pub colour: Colour,
}

impl Embedding {
    pub fn image(&self, v: usize) -> Option<usize> {
        self.map.get(&v).copied()
    }
}

/// True iff `e` is injective, covers every body and spike vertex of `h`
/// inside the host, and sends every edge of `h` to a triple of `colour`.
pub fn verify_embedding(c: &TripleColouring, h: &Hedgehog, colour: Colour, e: &Embedding) -> bool {
    if e.colour != colour || h.n_total() > c.n() {
        return false;
    }
    let mut used = vec![false; c.n()];
    for &image in e.map.values() {
        if image >= c.n() || std::mem::replace(&mut used[image], true) {
            return false;
        }
    }
    let covered = h.body().iter().chain(h.spikes().iter().map(|s| &s.vertex)).all(|v| e.map.contains_key(v));
    covered
        && h.spikes().iter().all(|s| {
            let (a, b, x) = (e.map[&s.pair.0], e.map[&s.pair.1], e.map[&s.vertex]);
            c.colour(a, b, x) == colour
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hedgehog::standard_hedgehog;

    #[test]
    fn identity_on_red_host() {
        let c = TripleColouring::monochromatic(3, Colour::Red);
        let h = standard_hedgehog(2).unwrap();
        let e = Embedding { map: (0..3).map(|v| (v, v)).collect(), colour: Colour::Red };
        assert!(verify_embedding(&c, &h, Colour::Red, &e));
        let blue = Embedding { colour: Colour::Blue, ..e.clone() };
        assert!(!verify_embedding(&c, &h, Colour::Blue, &blue));
        assert!(!verify_embedding(&c, &h, Colour::Blue, &e));
    }

    #[test]
    fn rejects_non_injective_and_partial() {
        let c = TripleColouring::monochromatic(4, Colour::Red);
        let h = standard_hedgehog(2).unwrap();
        let clash = Embedding { map: [(0, 0), (1, 1), (2, 1)].into_iter().collect(), colour: Colour::Red };
        assert!(!verify_embedding(&c, &h, Colour::Red, &clash));
        let partial = Embedding { map: [(0, 0), (1, 1)].into_iter().collect(), colour: Colour::Red };
        assert!(!verify_embedding(&c, &h, Colour::Red, &partial));
    }
}

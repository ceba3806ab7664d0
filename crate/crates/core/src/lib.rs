//! Generalised hedgehogs and their 2-colour Ramsey behaviour in 3-uniform
//! hypergraphs.
//!
//! The crate covers the lower-bound construction (a hedgehog with a heavy
//! core together with a colouring derived from a sparse random graph and a
//! certifier for it), the constructive embedding of a monochromatic hedgehog
//! into a large 2-coloured complete 3-graph, the decomposition of
//! 1-degenerate 3-graphs into hedgehogs, and brute-force oracles for all of
//! these on small instances.

pub mod clique;
pub mod colouring;
pub mod combinatorics;
pub mod construction;
pub mod degeneracy;
pub mod embedding;
pub mod error;
pub mod experiment;
pub mod generate;
pub mod graph;
pub mod hedgehog;
pub mod hypergraph;
pub mod io;
pub mod rng;

mod bitset;

pub use clique::{has_clique, has_independent_set};
pub use colouring::{derive_colouring, Colour, TripleColouring};
pub use combinatorics::{triple_rank, triple_unrank};
pub use construction::{
    check_lemma3, paper_lemma3_params, sample_gnp, verify_lower_bound_witness, Lemma3Params, Lemma3Report,
    WitnessReport,
};
pub use degeneracy::{degeneracy2, degeneracy3, DegeneracyResult};
pub use embedding::{
    build_aux_graph, cfr_embed, check_lemma4, find_mono_copy_exact, mark_vertices, ramsey_exact, ramsey_number,
    verify_embedding, AuxGraph, CfrOutcome, Embedding, RamseyOutcome, VertexMarking,
};
pub use error::{Error, Result};
pub use graph::Graph2;
pub use hedgehog::{
    build_hstar, decompose_hedgehogs, paper_hstar_params, spike_pair_graph, standard_hedgehog, to_hypergraph,
    validate_hedgehog, HStarParams, Hedgehog, Spike,
};
pub use hypergraph::{degree3, Hypergraph3};
pub use rng::SplitMix64;

//! Random graph sampling, the three-property check, and the lower-bound
//! witness certifier.

use crate::clique::{has_clique, has_independent_set, independence_number};
use crate::combinatorics::colex_pairs;
use crate::error::{Error, Result};
use crate::graph::Graph2;
use crate::hedgehog::HStarParams;
use crate::rng::{SplitMix64, Threshold};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma3Params {
    pub n_vertices: usize,
    pub p: f64,
    pub deg_bound: usize,
    pub clique_q: usize,
    pub indep_s: usize,
}

impl Lemma3Params {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParams(format!("p = {} outside [0, 1]", self.p)));
        }
        if self.clique_q == 0 || self.indep_s == 0 {
            return Err(Error::InvalidParams("clique and independent-set sizes must be positive".into()));
        }
        Ok(())
    }
}

/// Binomial random graph `G(n, p)`: one SplitMix64 draw per pair in colex
/// order, the pair kept iff the draw falls below `p * 2^64`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph2> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("p = {p} outside [0, 1]")));
    }
    let threshold = Threshold::from_probability(p);
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph2::new(n);
    for (u, v) in colex_pairs(n) {
        if rng.bernoulli(threshold) {
            g.insert(u, v);
        }
    }
    Ok(g)
}

/// Random-graph parameters at size `n` (natural log):
/// `N = floor(n^{3/2} / (10^6 ln n))`, `p = min(1, 800 ln n / sqrt n)`,
/// degree bound `floor(3n / 2000)`, clique size 10, independent-set size
/// `floor(sqrt(n) / 50)`.
pub fn paper_lemma3_params(n: u64) -> Result<Lemma3Params> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("n = {n} too small (need ln n > 1)")));
    }
    let nf = n as f64;
    let ln = nf.ln();
    let n_vertices = (nf.powf(1.5) / (1e6 * ln)).floor() as usize;
    if n_vertices < 2 {
        return Err(Error::InvalidParams(format!("n = {n} gives a graph on {n_vertices} vertices (need at least 2)")));
    }
    Ok(Lemma3Params {
        n_vertices,
        p: (800.0 * ln / nf.sqrt()).min(1.0),
        deg_bound: (3 * n / 2000) as usize,
        clique_q: 10,
        indep_s: (n.isqrt() / 50) as usize,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma3Report {
    pub deg_ok: bool,
    pub clique_ok: bool,
    pub indep_ok: bool,
    pub max_degree: usize,
    pub clique_witness: Option<Vec<usize>>,
    pub indep_witness: Option<Vec<usize>>,
}

impl Lemma3Report {
    pub fn all_ok(&self) -> bool {
        self.deg_ok && self.clique_ok && self.indep_ok
    }
}

pub fn check_lemma3(g: &Graph2, params: &Lemma3Params) -> Result<Lemma3Report> {
    params.validate()?;
    if g.n() != params.n_vertices {
        return Err(Error::SizeMismatch { expected: params.n_vertices, actual: g.n() });
    }
    let max_degree = g.max_degree();
    let clique_witness = has_clique(g, params.clique_q);
    let indep_witness = has_independent_set(g, params.indep_s);
    Ok(Lemma3Report {
        deg_ok: max_degree <= params.deg_bound,
        clique_ok: clique_witness.is_none(),
        indep_ok: indep_witness.is_none(),
        max_degree,
        clique_witness,
        indep_witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub certified: bool,
    /// No independent set of size `b`: a blue copy would need one.
    pub alpha_ok: bool,
    /// No clique of size `k`.
    pub clique_ok: bool,
    /// `m + 1 > 2 * max_degree`: every heavy pair of a red copy must be an
    /// edge of the graph.
    pub multiplicity_ok: bool,
    pub alpha_value: usize,
    pub max_degree: usize,
    pub clique_found: Option<Vec<usize>>,
}

/// Certifies that the colouring derived from `gamma` has no monochromatic
/// copy of the lower-bound hedgehog with parameters `p`.
///
/// A blue copy maps its body onto an independent set of size `b`. In a red
/// copy every heavy pair lies in at least `m + 1` red triples, while a
/// non-edge `uv` lies in at most `d(u) + d(v) <= 2 * max_degree` of them, so
/// the heavy core maps onto a clique of size `k`. Only `b >= 2` and
/// `k >= 1` are required; `n_total` is not used.
pub fn verify_lower_bound_witness(gamma: &Graph2, p: &HStarParams) -> Result<WitnessReport> {
    if p.b < 2 || p.k < 1 {
        return Err(Error::InvalidParams(format!("need b >= 2 and k >= 1, got b = {}, k = {}", p.b, p.k)));
    }
    if gamma.n() == 0 {
        return Err(Error::InvalidParams("empty graph".into()));
    }
    let alpha_value = independence_number(gamma);
    let clique_found = has_clique(gamma, p.k);
    let max_degree = gamma.max_degree();
    let alpha_ok = alpha_value < p.b;
    let clique_ok = clique_found.is_none();
    let multiplicity_ok = p.m as u64 + 1 > 2 * max_degree as u64;
    Ok(WitnessReport {
        certified: alpha_ok && clique_ok && multiplicity_ok,
        alpha_ok,
        clique_ok,
        multiplicity_ok,
        alpha_value,
        max_degree,
        clique_found,
    })
}

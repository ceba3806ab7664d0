//! Seeded multi-trial experiments with CSV output.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::colouring::{Colour, TripleColouring};
use crate::construction::{check_lemma3, sample_gnp, verify_lower_bound_witness, Lemma3Params};
use crate::embedding::{cfr_embed, verify_embedding, CfrOutcome};
use crate::error::{Error, Result};
use crate::generate::{random_hedgehog, random_one_degenerate};
use crate::hedgehog::{decompose_hedgehogs, to_hypergraph, validate_hedgehog, HStarParams};
use crate::rng::{trial_seed, SplitMix64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    Lemma3Rate,
    CfrSuccess,
    WitnessSweep,
    DecomposeStats,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Lemma3Rate => "lemma3-rate",
            ExperimentKind::CfrSuccess => "cfr-success",
            ExperimentKind::WitnessSweep => "witness-sweep",
            ExperimentKind::DecomposeStats => "decompose-stats",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            ExperimentKind::Lemma3Rate,
            ExperimentKind::CfrSuccess,
            ExperimentKind::WitnessSweep,
            ExperimentKind::DecomposeStats,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::InvalidParams(format!("unknown experiment kind {s:?}")))
    }
}

/// How cfr-success trials colour their host.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HostModel {
    /// Every triple red with probability `red_bias`.
    Random {
        red_bias: f64,
    },
    /// Derived from `G(N, p)`.
    Derived {
        p: f64,
    },
    /// Even trials random, odd trials derived.
    Mixed {
        red_bias: f64,
        p: f64,
    },
    Monochromatic(Colour),
}

impl fmt::Display for HostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostModel::Random { red_bias } => write!(f, "random:{red_bias}"),
            HostModel::Derived { p } => write!(f, "derived:{p}"),
            HostModel::Mixed { red_bias, p } => write!(f, "mixed:{red_bias}:{p}"),
            HostModel::Monochromatic(c) => write!(f, "all-{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExperimentParams {
    Lemma3Rate(Lemma3Params),
    CfrSuccess { hedgehog_n: usize, host_n: usize, host: HostModel },
    WitnessSweep { graph_n: usize, p: f64, hstar: HStarParams },
    DecomposeStats { max_vertices: usize },
}

impl ExperimentParams {
    pub fn kind(&self) -> ExperimentKind {
        match self {
            ExperimentParams::Lemma3Rate(_) => ExperimentKind::Lemma3Rate,
            ExperimentParams::CfrSuccess { .. } => ExperimentKind::CfrSuccess,
            ExperimentParams::WitnessSweep { .. } => ExperimentKind::WitnessSweep,
            ExperimentParams::DecomposeStats { .. } => ExperimentKind::DecomposeStats,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub params: ExperimentParams,
    pub master_seed: u64,
    pub trials: usize,
    /// Fill the `elapsed_ms` column with wall-clock times. Off by default so
    /// that the CSV depends only on the seed.
    pub record_timing: bool,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParams("trial count must be at least 1".into()));
        }
        match &self.params {
            ExperimentParams::Lemma3Rate(p) => p.validate(),
            ExperimentParams::CfrSuccess { hedgehog_n, host_n, host } => {
                if *hedgehog_n < 3 {
                    return Err(Error::InvalidParams("hedgehog size must be at least 3".into()));
                }
                if hedgehog_n > host_n {
                    return Err(Error::InvalidParams("hedgehog larger than host".into()));
                }
                let probs: &[f64] = match host {
                    HostModel::Random { red_bias } => &[*red_bias],
                    HostModel::Derived { p } => &[*p],
                    HostModel::Mixed { red_bias, p } => &[*red_bias, *p],
                    HostModel::Monochromatic(_) => &[],
                };
                if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
                    return Err(Error::InvalidParams("probabilities must lie in [0, 1]".into()));
                }
                Ok(())
            }
            ExperimentParams::WitnessSweep { graph_n, p, hstar } => {
                if *graph_n == 0 || !(0.0..=1.0).contains(p) {
                    return Err(Error::InvalidParams("need a nonempty graph and p in [0, 1]".into()));
                }
                hstar.validate_shape()
            }
            ExperimentParams::DecomposeStats { max_vertices } => {
                if *max_vertices < 3 {
                    return Err(Error::InvalidParams("max vertices must be at least 3".into()));
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvReport {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub successes: usize,
    pub total_elapsed_ms: f64,
}

impl CsvReport {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io_err = |e: csv::Error| Error::InvalidParams(format!("csv write failed: {e}"));
        w.write_record(&self.header).map_err(io_err)?;
        for row in &self.rows {
            w.write_record(row).map_err(io_err)?;
        }
        w.flush().map_err(|e| Error::InvalidParams(format!("csv write failed: {e}")))
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn success_rate(&self) -> f64 {
        self.successes as f64 / self.rows.len().max(1) as f64
    }

    pub fn mean_elapsed_ms(&self) -> f64 {
        self.total_elapsed_ms / self.rows.len().max(1) as f64
    }
}

struct TrialResult {
    fields: Vec<String>,
    outcome: String,
    success: bool,
}

fn columns(params: &ExperimentParams) -> Vec<&'static str> {
    match params {
        ExperimentParams::Lemma3Rate(_) => {
            vec!["n", "p", "deg_bound", "clique_q", "indep_s", "max_degree", "deg_ok", "clique_ok", "indep_ok"]
        }
        ExperimentParams::CfrSuccess { .. } => {
            vec!["hedgehog_n", "host_n", "host", "colour", "v1_size", "degeneracy", "verified"]
        }
        ExperimentParams::WitnessSweep { .. } => {
            vec!["n", "p", "b", "k", "m", "alpha", "max_degree", "alpha_ok", "clique_ok", "multiplicity_ok"]
        }
        ExperimentParams::DecomposeStats { .. } => vec!["max_vertices", "vertices", "edges", "parts"],
    }
}

fn run_trial(params: &ExperimentParams, trial: usize, seed: u64) -> Result<TrialResult> {
    let mut rng = SplitMix64::new(seed);
    match params {
        ExperimentParams::Lemma3Rate(p) => {
            let g = sample_gnp(p.n_vertices, p.p, seed)?;
            let r = check_lemma3(&g, p)?;
            let mut failed = Vec::new();
            for (ok, name) in [(r.deg_ok, "deg"), (r.clique_ok, "clique"), (r.indep_ok, "indep")] {
                if !ok {
                    failed.push(name);
                }
            }
            Ok(TrialResult {
                fields: vec![
                    p.n_vertices.to_string(),
                    p.p.to_string(),
                    p.deg_bound.to_string(),
                    p.clique_q.to_string(),
                    p.indep_s.to_string(),
                    r.max_degree.to_string(),
                    r.deg_ok.to_string(),
                    r.clique_ok.to_string(),
                    r.indep_ok.to_string(),
                ],
                outcome: if failed.is_empty() { "pass".into() } else { format!("fail:{}", failed.join("+")) },
                success: failed.is_empty(),
            })
        }
        ExperimentParams::CfrSuccess { hedgehog_n, host_n, host } => {
            let h_red = random_hedgehog(*hedgehog_n, &mut rng);
            let h_blue = random_hedgehog(*hedgehog_n, &mut rng);
            let host_seed = rng.next_u64();
            let c = match *host {
                HostModel::Random { red_bias } => TripleColouring::random(*host_n, red_bias, host_seed)?,
                HostModel::Derived { p } => TripleColouring::derived(sample_gnp(*host_n, p, host_seed)?),
                HostModel::Mixed { red_bias, p } if trial.is_multiple_of(2) => {
                    let _ = p;
                    TripleColouring::random(*host_n, red_bias, host_seed)?
                }
                HostModel::Mixed { p, .. } => TripleColouring::derived(sample_gnp(*host_n, p, host_seed)?),
                HostModel::Monochromatic(colour) => TripleColouring::monochromatic(*host_n, colour),
            };
            let outcome = cfr_embed(&c, &h_red, &h_blue, *hedgehog_n)?;
            let base = vec![hedgehog_n.to_string(), host_n.to_string(), host.to_string()];
            Ok(match outcome {
                CfrOutcome::Embedded(s) => {
                    let target = if s.embedding.colour == Colour::Red { &h_red } else { &h_blue };
                    let verified = verify_embedding(&c, target, s.embedding.colour, &s.embedding);
                    let mut fields = base;
                    fields.extend([
                        s.embedding.colour.to_string(),
                        s.v1_size.to_string(),
                        s.degeneracy.to_string(),
                        verified.to_string(),
                    ]);
                    TrialResult {
                        fields,
                        outcome: if verified { "embedded".into() } else { "unverified".into() },
                        success: verified,
                    }
                }
                CfrOutcome::Failed(f) => {
                    let mut fields = base;
                    fields.extend([f.colour.to_string(), String::new(), String::new(), "false".into()]);
                    TrialResult { fields, outcome: format!("failed:{}", f.stage), success: false }
                }
            })
        }
        ExperimentParams::WitnessSweep { graph_n, p, hstar } => {
            let g = sample_gnp(*graph_n, *p, seed)?;
            let r = verify_lower_bound_witness(&g, hstar)?;
            Ok(TrialResult {
                fields: vec![
                    graph_n.to_string(),
                    p.to_string(),
                    hstar.b.to_string(),
                    hstar.k.to_string(),
                    hstar.m.to_string(),
                    r.alpha_value.to_string(),
                    r.max_degree.to_string(),
                    r.alpha_ok.to_string(),
                    r.clique_ok.to_string(),
                    r.multiplicity_ok.to_string(),
                ],
                outcome: if r.certified { "certified".into() } else { "not-certified".into() },
                success: r.certified,
            })
        }
        ExperimentParams::DecomposeStats { max_vertices } => {
            let h = random_one_degenerate(*max_vertices, &mut rng);
            let parts = decompose_hedgehogs(&h)?;
            let mut edges: Vec<_> = parts.iter().flat_map(|p| p.edges()).collect();
            edges.sort_unstable();
            let valid =
                edges == h.edges() && parts.iter().all(|p| validate_hedgehog(&to_hypergraph(p), p.body()).is_ok());
            Ok(TrialResult {
                fields: vec![
                    max_vertices.to_string(),
                    h.n().to_string(),
                    h.edge_count().to_string(),
                    parts.len().to_string(),
                ],
                outcome: if valid { "valid".into() } else { "invalid".into() },
                success: valid,
            })
        }
    }
}

/// Runs every trial (in parallel) and collects rows in trial order. Trial
/// `i` uses seed [`trial_seed`]`(master_seed, i)`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<CsvReport> {
    spec.validate()?;
    let results: Vec<(u64, Result<TrialResult>, f64)> = (0..spec.trials)
        .into_par_iter()
        .map(|trial| {
            let seed = trial_seed(spec.master_seed, trial as u64);
            let start = Instant::now();
            let result = run_trial(&spec.params, trial, seed);
            (seed, result, start.elapsed().as_secs_f64() * 1e3)
        })
        .collect();

    let mut header = vec!["trial".to_string(), "seed".to_string()];
    header.extend(columns(&spec.params).into_iter().map(String::from));
    header.extend(["outcome".to_string(), "elapsed_ms".to_string()]);
    let mut rows = Vec::with_capacity(results.len());
    let mut successes = 0;
    let mut total_elapsed_ms = 0.0;
    for (trial, (seed, result, elapsed)) in results.into_iter().enumerate() {
        let r = result?;
        successes += usize::from(r.success);
        total_elapsed_ms += elapsed;
        let mut row = vec![trial.to_string(), seed.to_string()];
        row.extend(r.fields);
        row.push(r.outcome);
        row.push(if spec.record_timing { format!("{elapsed:.3}") } else { String::new() });
        rows.push(row);
    }
    Ok(CsvReport { header, rows, successes, total_elapsed_ms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(params: ExperimentParams, trials: usize) -> ExperimentSpec {
        ExperimentSpec { params, master_seed: 42, trials, record_timing: false }
    }

    #[test]
    fn lemma3_rate_with_empty_graph() {
        let p = Lemma3Params { n_vertices: 20, p: 0.0, deg_bound: 5, clique_q: 10, indep_s: 5 };
        let r = run_experiment(&spec(ExperimentParams::Lemma3Rate(p), 1)).unwrap();
        assert_eq!(r.successes, 0);
        assert_eq!(r.rows[0][r.header.iter().position(|h| h == "outcome").unwrap()], "fail:indep");
    }

    #[test]
    fn cfr_on_all_red_always_succeeds() {
        let params =
            ExperimentParams::CfrSuccess { hedgehog_n: 8, host_n: 40, host: HostModel::Monochromatic(Colour::Red) };
        let r = run_experiment(&spec(params, 6)).unwrap();
        assert_eq!(r.successes, 6);
    }

    #[test]
    fn identical_seed_identical_csv() {
        let params = ExperimentParams::DecomposeStats { max_vertices: 30 };
        let a = run_experiment(&spec(params.clone(), 20)).unwrap().to_csv_string();
        let b = run_experiment(&spec(params, 20)).unwrap().to_csv_string();
        assert_eq!(a, b);
        assert!(a.starts_with("trial,seed,max_vertices,vertices,edges,parts,outcome,elapsed_ms\n"));
    }

    #[test]
    fn rejects_zero_trials() {
        let params = ExperimentParams::DecomposeStats { max_vertices: 30 };
        assert!(run_experiment(&spec(params, 0)).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ["lemma3-rate", "cfr-success", "witness-sweep", "decompose-stats"] {
            assert_eq!(k.parse::<ExperimentKind>().unwrap().name(), k);
        }
        assert!("nope".parse::<ExperimentKind>().is_err());
    }
}

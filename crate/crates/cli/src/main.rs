//! `hedgehog` command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or I/O errors, 2 when the computation
//! completed but the answer is negative (embedding failed, witness not
//! certified, no copy found, Ramsey number above the search bound).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hedgehog_core::experiment::{run_experiment, ExperimentKind, ExperimentParams, ExperimentSpec, HostModel};
use hedgehog_core::io;
use hedgehog_core::*;

#[derive(Parser)]
#[command(name = "hedgehog", version, about = "Generalised hedgehogs in 2-coloured 3-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the heavy-core hedgehog H*(b, k, m, n_total).
    GenHstar(GenHstarArgs),
    /// Build the standard hedgehog on a body of size b.
    GenStandard {
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Split a 1-degenerate 3-graph into edge-disjoint hedgehogs.
    Decompose {
        #[arg(short, long)]
        input: PathBuf,
        /// Drop isolated vertices before decomposing.
        #[arg(long)]
        strip_isolated: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Random graphs and their sparsity checks.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Triple colourings.
    #[command(subcommand)]
    Color(ColorCommand),
    /// Monochromatic hedgehog embeddings.
    #[command(subcommand)]
    Embed(EmbedCommand),
    /// Exact Ramsey numbers for tiny hedgehogs.
    #[command(subcommand)]
    Ramsey(RamseyCommand),
    /// Lower-bound witness certification.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Seeded multi-trial experiments with CSV output.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Args)]
struct Output {
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Args)]
struct GenHstarArgs {
    #[arg(long, required_unless_present = "paper_params")]
    b: Option<usize>,
    #[arg(long, required_unless_present = "paper_params")]
    k: Option<usize>,
    #[arg(long, required_unless_present = "paper_params")]
    m: Option<usize>,
    #[arg(long, required_unless_present = "paper_params")]
    n_total: Option<usize>,
    /// Derive b, k, m and n_total from the target size n.
    #[arg(long, value_name = "N", conflicts_with_all = ["b", "k", "m", "n_total"])]
    paper_params: Option<usize>,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Sample G(n, p).
    SampleGnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Check the degree, clique and independence bounds of a graph.
    CheckLemma3 {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, required_unless_present = "paper_params")]
        deg_bound: Option<usize>,
        #[arg(long, required_unless_present = "paper_params")]
        clique: Option<usize>,
        #[arg(long, required_unless_present = "paper_params")]
        indep: Option<usize>,
        /// Use the bounds prescribed for hedgehog size n.
        #[arg(long, value_name = "N", conflicts_with_all = ["deg_bound", "clique", "indep"])]
        paper_params: Option<u64>,
        /// Write witnesses for failed checks here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ColorCommand {
    /// Colour a triple red iff it contains an edge of the graph.
    Derive {
        #[arg(short, long)]
        graph: PathBuf,
        /// Write every triple instead of a reference to the graph file.
        #[arg(long)]
        explicit: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Colour each triple red independently with probability `bias`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Rewrite any colouring file as an explicit bit array.
    Materialise {
        #[arg(short, long)]
        colouring: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum EmbedCommand {
    /// Greedy embedding of a red or blue hedgehog.
    Cfr {
        #[arg(short, long)]
        colouring: PathBuf,
        #[arg(long)]
        red: PathBuf,
        #[arg(long)]
        blue: PathBuf,
        /// Size parameter: scarce-pair thresholds are n, marking uses 2n.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustive search for a monochromatic copy.
    Exact {
        #[arg(short, long)]
        colouring: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long, value_enum)]
        colour: ColourArg,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ColourArg {
    Red,
    Blue,
}

impl From<ColourArg> for Colour {
    fn from(c: ColourArg) -> Self {
        match c {
            ColourArg::Red => Colour::Red,
            ColourArg::Blue => Colour::Blue,
        }
    }
}

#[derive(Subcommand)]
enum RamseyCommand {
    /// Least N such that every colouring has a red `red` or a blue `blue`.
    Exact {
        #[arg(long)]
        red: PathBuf,
        #[arg(long)]
        blue: PathBuf,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Certify that the colouring derived from a graph avoids H*.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long, required_unless_present = "paper_params")]
        b: Option<usize>,
        #[arg(long, required_unless_present = "paper_params")]
        k: Option<usize>,
        #[arg(long, required_unless_present = "paper_params")]
        m: Option<usize>,
        #[arg(long)]
        n_total: Option<usize>,
        #[arg(long, value_name = "N", conflicts_with_all = ["b", "k", "m", "n_total"])]
        paper_params: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ExperimentCommand {
    Run(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Lemma3Rate,
    CfrSuccess,
    WitnessSweep,
    DecomposeStats,
}

impl From<KindArg> for ExperimentKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Lemma3Rate => ExperimentKind::Lemma3Rate,
            KindArg::CfrSuccess => ExperimentKind::CfrSuccess,
            KindArg::WitnessSweep => ExperimentKind::WitnessSweep,
            KindArg::DecomposeStats => ExperimentKind::DecomposeStats,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HostArg {
    Random,
    Derived,
    Mixed,
    AllRed,
    AllBlue,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    trials: usize,
    /// Fill the elapsed_ms column (makes the CSV timing-dependent).
    #[arg(long)]
    record_timing: bool,

    /// Graph size for lemma3-rate and witness-sweep.
    #[arg(long, default_value_t = 60)]
    graph_n: usize,
    /// Edge probability of sampled graphs.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 27)]
    deg_bound: usize,
    #[arg(long, default_value_t = 10)]
    clique: usize,
    #[arg(long, default_value_t = 25)]
    indep: usize,

    #[arg(long, default_value_t = 12)]
    hedgehog_n: usize,
    #[arg(long, default_value_t = 416)]
    host_n: usize,
    #[arg(long, value_enum, default_value_t = HostArg::Mixed)]
    host: HostArg,
    #[arg(long, default_value_t = 0.5)]
    red_bias: f64,

    #[arg(long, default_value_t = 3)]
    b: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 5)]
    m: usize,

    #[arg(long, default_value_t = 40)]
    max_vertices: usize,

    #[command(flatten)]
    out: Output,
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Positive,
    Negative,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Verdict> {
    match command {
        Command::GenHstar(args) => gen_hstar(args),
        Command::GenStandard { b, out } => {
            out.emit(&io::format_hedgehog(&standard_hedgehog(b)?))?;
            Ok(Verdict::Positive)
        }
        Command::Decompose { input, strip_isolated, out } => decompose(&input, strip_isolated, &out),
        Command::Graph(GraphCommand::SampleGnp { n, p, seed, out }) => {
            out.emit(&io::format_graph(&sample_gnp(n, p, seed)?))?;
            Ok(Verdict::Positive)
        }
        Command::Graph(GraphCommand::CheckLemma3 { input, deg_bound, clique, indep, paper_params, report }) => {
            let g = io::read_graph(&input)?;
            let params = match paper_params {
                Some(n) => paper_lemma3_params(n)?,
                None => Lemma3Params {
                    n_vertices: g.n(),
                    p: 0.0,
                    deg_bound: deg_bound.expect("required by clap"),
                    clique_q: clique.expect("required by clap"),
                    indep_s: indep.expect("required by clap"),
                },
            };
            check_lemma3_cmd(&g, &params, report.as_deref())
        }
        Command::Color(cmd) => color(cmd),
        Command::Embed(EmbedCommand::Cfr { colouring, red, blue, n, out }) => {
            let c = io::read_colouring(&colouring)?;
            let h_red = io::read_hedgehog(&red)?;
            let h_blue = io::read_hedgehog(&blue)?;
            embed_cfr(&c, &h_red, &h_blue, n, &out)
        }
        Command::Embed(EmbedCommand::Exact { colouring, target, colour, out }) => {
            let c = io::read_colouring(&colouring)?;
            let h = io::read_hedgehog(&target)?;
            let colour = Colour::from(colour);
            match find_mono_copy_exact(&c, &h, colour) {
                Some(e) => {
                    out.emit(&format!("FOUND colour={colour}\n{}", listing(&e)))?;
                    Ok(Verdict::Positive)
                }
                None => {
                    out.emit(&format!("NONE colour={colour}\n"))?;
                    Ok(Verdict::Negative)
                }
            }
        }
        Command::Ramsey(RamseyCommand::Exact { red, blue, nmax }) => {
            let h_red = io::read_hedgehog(&red)?;
            let h_blue = io::read_hedgehog(&blue)?;
            match ramsey_number(&h_red, &h_blue, nmax)? {
                RamseyOutcome::Number(n) => {
                    println!("{n}");
                    Ok(Verdict::Positive)
                }
                RamseyOutcome::Exceeds(n) => {
                    println!(">{n}");
                    Ok(Verdict::Negative)
                }
            }
        }
        Command::Witness(WitnessCommand::Verify { graph, b, k, m, n_total, paper_params, report }) => {
            let gamma = io::read_graph(&graph)?;
            let params = match paper_params {
                Some(n) => paper_hstar_params(n)?,
                None => {
                    let (b, k, m) = (b.expect("required"), k.expect("required"), m.expect("required"));
                    let base = HStarParams { b, k, m, n_total: 0 };
                    let n_total = n_total.unwrap_or(base.required_vertices() as usize);
                    HStarParams { n_total, ..base }
                }
            };
            witness_verify(&gamma, &params, report.as_deref())
        }
        Command::Experiment(ExperimentCommand::Run(args)) => experiment(args),
    }
}

fn gen_hstar(args: GenHstarArgs) -> Result<Verdict> {
    let params = match args.paper_params {
        Some(n) => paper_hstar_params(n)?,
        None => HStarParams {
            b: args.b.expect("required by clap"),
            k: args.k.expect("required by clap"),
            m: args.m.expect("required by clap"),
            n_total: args.n_total.expect("required by clap"),
        },
    };
    args.out.emit(&io::format_hedgehog(&build_hstar(&params)?))?;
    Ok(Verdict::Positive)
}

fn decompose(input: &Path, strip_isolated: bool, out: &Output) -> Result<Verdict> {
    let h = io::read_hypergraph(input)?;
    let (h, labels) = if strip_isolated {
        h.strip_isolated()
    } else {
        let n = h.n();
        (h, (0..n).collect())
    };
    let parts = decompose_hedgehogs(&h)?;
    let mut text = format!("hedgehogs {}\n", parts.len());
    for (i, part) in parts.iter().enumerate() {
        let body: Vec<usize> = part.body().iter().map(|&v| labels[v]).collect();
        let _ = write!(text, "part {i} body={body:?} spikes=[");
        for (j, s) in part.spikes().iter().enumerate() {
            let sep = if j == 0 { "" } else { " " };
            let (a, b) = (labels[s.pair.0], labels[s.pair.1]);
            let _ = write!(text, "{sep}{}:{}-{}", labels[s.vertex], a.min(b), a.max(b));
        }
        text.push_str("]\n");
    }
    out.emit(&text)?;
    Ok(Verdict::Positive)
}

fn yes_no(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "fail"
    }
}

fn check_lemma3_cmd(g: &Graph2, params: &Lemma3Params, report: Option<&Path>) -> Result<Verdict> {
    let r = check_lemma3(g, params)?;
    println!(
        "{} deg={} clique={} indep={} max_degree={}",
        if r.all_ok() { "PASS" } else { "FAIL" },
        yes_no(r.deg_ok),
        yes_no(r.clique_ok),
        yes_no(r.indep_ok),
        r.max_degree
    );
    if let Some(path) = report {
        let mut text = format!(
            "n {}\ndeg_bound {}\nclique_q {}\nindep_s {}\nmax_degree {}\n",
            g.n(),
            params.deg_bound,
            params.clique_q,
            params.indep_s,
            r.max_degree
        );
        if let Some(w) = &r.clique_witness {
            let _ = writeln!(text, "clique {w:?}");
        }
        if let Some(w) = &r.indep_witness {
            let _ = writeln!(text, "independent_set {w:?}");
        }
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if r.all_ok() { Verdict::Positive } else { Verdict::Negative })
}

fn color(cmd: ColorCommand) -> Result<Verdict> {
    match cmd {
        ColorCommand::Derive { graph, explicit, out } => {
            let g = io::read_graph(&graph)?;
            let text = if explicit {
                io::format_colouring_explicit(&derive_colouring(&g))?
            } else {
                let abs = fs::canonicalize(&graph).with_context(|| format!("resolving {}", graph.display()))?;
                io::format_colouring_derived(g.n(), &abs)
            };
            out.emit(&text)?;
        }
        ColorCommand::Random { n, bias, seed, out } => {
            out.emit(&io::format_colouring_explicit(&TripleColouring::random(n, bias, seed)?)?)?;
        }
        ColorCommand::Materialise { colouring, out } => {
            out.emit(&io::format_colouring_explicit(&io::read_colouring(&colouring)?)?)?;
        }
    }
    Ok(Verdict::Positive)
}

fn listing(e: &Embedding) -> String {
    e.map.iter().map(|(v, u)| format!("{v} {u}\n")).collect()
}

fn embed_cfr(c: &TripleColouring, h_red: &Hedgehog, h_blue: &Hedgehog, n: usize, out: &Output) -> Result<Verdict> {
    match cfr_embed(c, h_red, h_blue, n)? {
        CfrOutcome::Embedded(s) => {
            out.emit(&format!(
                "EMBEDDED colour={} v1={} degeneracy={}\n{}",
                s.embedding.colour,
                s.v1_size,
                s.degeneracy,
                listing(&s.embedding)
            ))?;
            Ok(Verdict::Positive)
        }
        CfrOutcome::Failed(f) => {
            out.emit(&format!(
                "FAILED stage={} colour={} vertex={} detail={}\n",
                f.stage, f.colour, f.vertex, f.detail
            ))?;
            Ok(Verdict::Negative)
        }
    }
}

fn witness_verify(gamma: &Graph2, params: &HStarParams, report: Option<&Path>) -> Result<Verdict> {
    let r = verify_lower_bound_witness(gamma, params)?;
    println!(
        "{} alpha={} clique={} multiplicity={}",
        if r.certified { "CERTIFIED" } else { "NOT_CERTIFIED" },
        yes_no(r.alpha_ok),
        yes_no(r.clique_ok),
        yes_no(r.multiplicity_ok)
    );
    if let Some(path) = report {
        let mut text = format!(
            "n {}\nb {}\nk {}\nm {}\nn_total {}\nalpha {}\nmax_degree {}\n",
            gamma.n(),
            params.b,
            params.k,
            params.m,
            params.n_total,
            r.alpha_value,
            r.max_degree
        );
        if let Some(w) = &r.clique_found {
            let _ = writeln!(text, "clique {w:?}");
        }
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if r.certified { Verdict::Positive } else { Verdict::Negative })
}

fn experiment(a: ExperimentArgs) -> Result<Verdict> {
    let params = match ExperimentKind::from(a.kind) {
        ExperimentKind::Lemma3Rate => ExperimentParams::Lemma3Rate(Lemma3Params {
            n_vertices: a.graph_n,
            p: a.p,
            deg_bound: a.deg_bound,
            clique_q: a.clique,
            indep_s: a.indep,
        }),
        ExperimentKind::CfrSuccess => ExperimentParams::CfrSuccess {
            hedgehog_n: a.hedgehog_n,
            host_n: a.host_n,
            host: match a.host {
                HostArg::Random => HostModel::Random { red_bias: a.red_bias },
                HostArg::Derived => HostModel::Derived { p: a.p },
                HostArg::Mixed => HostModel::Mixed { red_bias: a.red_bias, p: a.p },
                HostArg::AllRed => HostModel::Monochromatic(Colour::Red),
                HostArg::AllBlue => HostModel::Monochromatic(Colour::Blue),
            },
        },
        ExperimentKind::WitnessSweep => {
            let base = HStarParams { b: a.b, k: a.k, m: a.m, n_total: 0 };
            ExperimentParams::WitnessSweep {
                graph_n: a.graph_n,
                p: a.p,
                hstar: HStarParams { n_total: base.required_vertices() as usize, ..base },
            }
        }
        ExperimentKind::DecomposeStats => ExperimentParams::DecomposeStats { max_vertices: a.max_vertices },
    };
    let spec = ExperimentSpec { params, master_seed: a.seed, trials: a.trials, record_timing: a.record_timing };
    if let Err(e) = spec.validate() {
        bail!(e);
    }
    let report = run_experiment(&spec)?;
    a.out.emit(&report.to_csv_string())?;
    eprintln!(
        "trials={} successes={} success_rate={:.4} mean_elapsed_ms={:.3}",
        report.rows.len(),
        report.successes,
        report.success_rate(),
        report.mean_elapsed_ms()
    );
    Ok(Verdict::Positive)
}

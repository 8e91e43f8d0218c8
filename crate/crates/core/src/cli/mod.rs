//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or input
//! errors. Every command is deterministic given `--seed`.

mod bench;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

pub use bench::{bench_rows, write_bench_csv, BenchRow, SweepConfig};

use crate::comm::{run_protocol, split_edges, SplitMode};
use crate::edcs::{construct_edcs, params_for_epsilon, verify_edcs, EdcsParams};
use crate::exact::Epsilon;
use crate::gallai_edmonds::{decompose, verify_ge_properties, VertexClass};
use crate::generate::{generate, EdgeBudget, Family, GeneratorConfig};
use crate::graph::Graph;
use crate::io::{load_graph, parse_matching, write_graph};
use crate::matching::maximum_matching_seeded;
use crate::proof::{verify_trace, ProofError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "edcslab",
    version,
    about = "EDCS construction, verification and matching experiments"
)]
#[command(arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph in edge-list format.
    Generate(GenerateArgs),
    /// Build an EDCS of a graph by local fixing.
    ConstructEdcs(ConstructArgs),
    /// Check both EDCS properties of H against G; exit 1 on any violation.
    VerifyEdcs(VerifyArgs),
    /// Print the Gallai-Edmonds decomposition with special vertices.
    Decompose(DecomposeArgs),
    /// Evaluate every inequality of the approximation argument on one instance.
    TraceProof(TraceArgs),
    /// Simulate the one-way Alice-to-Bob matching protocol.
    SimulateComm(CommArgs),
    /// Run a parameter sweep and write one CSV row per (instance, ε).
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, requires = "beta_minus")]
    beta: Option<usize>,
    #[arg(long, requires = "beta")]
    beta_minus: Option<usize>,
    /// Derive β = ⌈50/ε⌉ and β⁻ = ⌈(1 - ε/10)β⌉ when β is not given.
    #[arg(long)]
    epsilon: Option<Epsilon>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<EdcsParams, String> {
        match (self.beta, self.beta_minus, &self.epsilon) {
            (Some(b), Some(bm), _) => EdcsParams::new(b, bm).map_err(|e| e.to_string()),
            (None, None, Some(eps)) => params_for_epsilon(eps).map_err(|e| e.to_string()),
            _ => Err("give --beta and --beta-minus, or --epsilon".into()),
        }
    }
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Exact edge count for the random families.
    #[arg(long, conflicts_with = "p")]
    m: Option<usize>,
    /// Per-pair edge probability for the random families.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    input: PathBuf,
    /// Defaults to stdout.
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    graph: PathBuf,
    edcs: PathBuf,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    /// Picks among maximum matchings; ignored with --matching.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum matching to mark specials with, in matching-file format.
    #[arg(long)]
    matching: Option<PathBuf>,
    input: PathBuf,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[arg(long)]
    epsilon: Epsilon,
    /// Override the derived β (requires --beta-minus).
    #[arg(long, requires = "beta_minus")]
    beta: Option<usize>,
    #[arg(long, requires = "beta")]
    beta_minus: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use this subgraph as H instead of constructing one.
    #[arg(long)]
    edcs: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    input: PathBuf,
}

#[derive(Debug, Args)]
struct CommArgs {
    #[arg(long)]
    epsilon: Epsilon,
    #[arg(long, default_value = "random")]
    mode: SplitMode,
    /// Probability that a random-mode edge goes to both parties.
    #[arg(long, default_value_t = 0.0)]
    overlap: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    input: PathBuf,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated family names.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "gnm-random,planted-tight"
    )]
    families: Vec<Family>,
    #[arg(long, value_delimiter = ',', default_value = "100")]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    epsilons: Vec<Epsilon>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    seeds: Vec<u64>,
    /// Edge probability for the random families.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Skip the proof trace; the trace_all_pass column is left empty.
    #[arg(long)]
    no_trace: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A command failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn check(message: impl ToString) -> Self {
        Failure {
            code: EXIT_CHECK_FAILED,
            message: message.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Generate(a) => cmd_generate(a, &mut out),
        Command::ConstructEdcs(a) => cmd_construct(a, &mut out),
        Command::VerifyEdcs(a) => cmd_verify(a, &mut out),
        Command::Decompose(a) => cmd_decompose(a, &mut out),
        Command::TraceProof(a) => cmd_trace(a, &mut out),
        Command::SimulateComm(a) => cmd_comm(a, &mut out),
        Command::Bench(a) => cmd_bench(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &PathBuf) -> Result<Graph, Failure> {
    load_graph(path).map_err(Failure::usage)
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(Failure::usage)
}

fn write_or_print(path: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))
        }
        None => emit(out, text),
    }
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write) -> CmdResult {
    let mut cfg = GeneratorConfig::new(a.family, a.n).with_seed(a.seed);
    cfg.budget = match (a.m, a.p) {
        (Some(m), _) => Some(EdgeBudget::Count(m)),
        (None, Some(p)) => Some(EdgeBudget::Probability(p)),
        (None, None) => None,
    };
    let g = generate(&cfg).map_err(Failure::usage)?;
    write_or_print(a.out.as_ref(), &write_graph(&g), out)
}

fn cmd_construct(a: ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let params = a.params.resolve().map_err(Failure::usage)?;
    let g = load(&a.input)?;
    let c = construct_edcs(&g, params, a.seed);
    write_or_print(a.output.as_ref(), &write_graph(&c.subgraph), out)?;
    if a.output.is_some() {
        emit(
            out,
            &format!(
                "edges={} fix_steps={} beta={} beta_minus={}\n",
                c.subgraph.edge_count(),
                c.fix_steps,
                params.beta(),
                params.beta_minus()
            ),
        )?;
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let params = a.params.resolve().map_err(Failure::usage)?;
    let g = load(&a.graph)?;
    let h = load(&a.edcs)?;
    let check = verify_edcs(&g, &h, params).map_err(Failure::usage)?;
    let mut text = String::new();
    for v in &check.p1_violations {
        text += &format!(
            "P1 violation {} edge_degree={} > {}\n",
            v.edge,
            v.edge_degree,
            params.beta()
        );
    }
    for v in &check.p2_violations {
        text += &format!(
            "P2 violation {} edge_degree={} < {}\n",
            v.edge,
            v.edge_degree,
            params.beta_minus()
        );
    }
    if check.is_edcs() {
        text += &format!("EDCS ok: {} edges\n", h.edge_count());
    }
    emit(out, &text)?;
    if check.is_edcs() {
        Ok(())
    } else {
        Err(Failure::check(format!(
            "{} P1 and {} P2 violations",
            check.p1_violations.len(),
            check.p2_violations.len()
        )))
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_decompose(a: DecomposeArgs, out: &mut dyn Write) -> CmdResult {
    let h = load(&a.input)?;
    let m = match &a.matching {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            parse_matching(&text, &h)
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?
        }
        None => maximum_matching_seeded(&h, a.seed),
    };
    let ge = decompose(&h)
        .mark_specials(&h, &m)
        .map_err(Failure::check)?;
    let mut text = String::new();
    for (label, class) in [
        ("D", VertexClass::D),
        ("A", VertexClass::A),
        ("C", VertexClass::C),
    ] {
        let members: Vec<usize> = (0..h.vertex_count())
            .filter(|&v| ge.class(v) == class)
            .collect();
        text += &format!("{label}: {}\n", join(&members));
    }
    for (id, comp) in ge.components().iter().enumerate() {
        let special = ge.special_of(id).expect("specials marked");
        text += &format!("component {id}: {} special={special}\n", join(comp));
    }
    emit(out, &text)?;
    let report = verify_ge_properties(&ge, &h, &m);
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::check(format!(
            "decomposition properties failed: {report:?}"
        )))
    }
}

fn cmd_trace(a: TraceArgs, out: &mut dyn Write) -> CmdResult {
    let params = match (a.beta, a.beta_minus) {
        (Some(b), Some(bm)) => EdcsParams::new(b, bm),
        _ => params_for_epsilon(&a.epsilon),
    }
    .map_err(Failure::usage)?;
    let g = load(&a.input)?;
    let h = match &a.edcs {
        Some(p) => load(p)?,
        None => construct_edcs(&g, params, a.seed).subgraph,
    };
    let trace = verify_trace(&g, &h, params, &a.epsilon, a.seed).map_err(|e| match e {
        ProofError::NotSubgraph => Failure::usage(e),
        e => Failure::check(e),
    })?;
    if a.json {
        let json = serde_json::to_string_pretty(&trace).map_err(Failure::usage)?;
        emit(out, &(json + "\n"))?;
    } else {
        let text: String = trace.checks.iter().map(|c| format!("{c}\n")).collect();
        emit(out, &text)?;
    }
    if trace.all_pass() {
        Ok(())
    } else {
        let names: Vec<&str> = trace.failures().map(|c| c.name.as_str()).collect();
        Err(Failure::check(format!(
            "failed checks: {}",
            names.join(", ")
        )))
    }
}

fn cmd_comm(a: CommArgs, out: &mut dyn Write) -> CmdResult {
    let g = load(&a.input)?;
    let mode = match a.mode {
        SplitMode::Random { .. } => SplitMode::Random { overlap: a.overlap },
        m => m,
    };
    let inst = split_edges(&g, mode, a.epsilon, a.seed).map_err(Failure::usage)?;
    let r = run_protocol(&inst).map_err(Failure::usage)?;
    emit(out, &format!("{r}\n"))?;
    if r.pass {
        Ok(())
    } else {
        Err(Failure::check(""))
    }
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = SweepConfig {
        families: a.families,
        sizes: a.sizes,
        epsilons: a.epsilons,
        seeds: a.seeds,
        p: a.p,
        trace: !a.no_trace,
    };
    cfg.validate().map_err(Failure::usage)?;
    let rows = bench_rows(&cfg).map_err(Failure::usage)?;
    match &a.out {
        Some(p) => {
            let file = std::fs::File::create(p)
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            write_bench_csv(file, &rows).map_err(Failure::usage)?;
        }
        None => write_bench_csv(&mut *out, &rows).map_err(Failure::usage)?,
    }
    if rows.iter().all(BenchRow::passes) {
        Ok(())
    } else {
        Err(Failure::check(
            "some rows fall below the threshold or fail the trace",
        ))
    }
}

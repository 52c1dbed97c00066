//! `hyp`: exact hyperbolicity constants, extremal bounds, witness graph
//! constructions, decompositions, and the random-model experiment harness.
//!
//! Exit codes: 0 success, 1 invalid input, 2 computation cap exceeded,
//! 3 invariant violation reported by `verify`.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hypgraph::bounds::gap_report;
use hypgraph::construct::{
    a_one_witness, cycle_clique_witness, kn_minus_cliques, tree_witness, triangle_cactus,
    CliqueRemovalSpec,
};
use hypgraph::decompose::{canonical_t_decomposition, t_edge_decomposition};
use hypgraph::geodesic::GeodesicError;
use hypgraph::hyperbolicity::{
    delta_exact_with, delta_via_blocks_with, DeltaError, DeltaOptions, DeltaResult,
    DEFAULT_GEODESIC_CAP,
};
use hypgraph::random::run_experiment;
use hypgraph::verify::{run_all, VerifyOptions};
use hypgraph::{Graph, GraphPoint, Mode};

#[derive(Parser)]
#[command(name = "hyp", version, about = "Gromov hyperbolicity toolkit for unit-edge graphs")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Standard,
    Fine,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Standard => Mode::Standard,
            ModeArg::Fine => Mode::Fine,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact delta of a graph read from an edge-list file.
    Delta(DeltaArgs),
    /// Closed-form bounds report for one (n, m) cell, as JSON.
    Bounds {
        n: u64,
        m: u64,
        /// JSON is the only output format; accepted for symmetry.
        #[arg(long)]
        json: bool,
    },
    /// Emit a witness construction as an edge list on stdout.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Cut vertices and blocks of the T-decomposition, as JSON.
    Decompose {
        file: String,
        /// Use the T-edge-decomposition instead of the canonical one.
        #[arg(long)]
        edge: bool,
    },
    /// Sample the connected random model R'(n,m) and report delta statistics.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Raise the exact-oracle size cap (default 10).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Run the full invariant suite; one pass/fail line per property.
    Verify {
        /// Cap the per-criterion graph sizes for a quick run.
        #[arg(long)]
        max_n: Option<u64>,
    },
}

#[derive(Args)]
struct DeltaArgs {
    /// Edge-list file: first line "n m", then one "u v" line per edge.
    file: String,
    #[arg(long, value_enum, default_value = "standard")]
    mode: ModeArg,
    /// Compute per block of the canonical T-decomposition and take the max.
    #[arg(long)]
    blocks: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Triangle cactus in G(n,m) with delta = 3/4 (needs m >= n, 2m <= 3n-3).
    Cactus { n: u64, m: u64 },
    /// Complete graph minus the edges inside disjoint classes.
    KnMinus { n: u64, parts: Vec<u64> },
    /// Member of G(n,m) with delta = 1 (dense block plus path tail).
    AOne { n: u64, m: u64 },
    /// Cycle plus chords in a path segment; delta >= (n-n0+3)/4.
    CycleClique { n: u64, n0: u64, m: u64 },
    /// Path graph: the delta = 0 witness.
    Tree { n: u64 },
}

fn main() -> ExitCode {
    // Usage errors exit 1 (2 is reserved for computation cap overruns).
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: could not configure {jobs} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    CapExceeded(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::CapExceeded(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) | CliError::CapExceeded(m) => write!(f, "{m}"),
        }
    }
}

impl From<DeltaError> for CliError {
    fn from(e: DeltaError) -> Self {
        match e {
            DeltaError::Geodesics(GeodesicError::CapExceeded { .. }) => {
                CliError::CapExceeded(format!("{e}; raise HYP_GEODESIC_CAP to retry"))
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn geodesic_cap() -> Result<u64, CliError> {
    match std::env::var("HYP_GEODESIC_CAP") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| CliError::Invalid(format!("bad HYP_GEODESIC_CAP value {text:?}"))),
        Err(_) => Ok(DEFAULT_GEODESIC_CAP),
    }
}

fn load_graph(path: &str) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {path}: {e}")))?;
    Graph::parse_edge_list(&text).map_err(invalid)
}

fn point_json(p: GraphPoint) -> serde_json::Value {
    serde_json::json!(p.to_string())
}

fn delta_json(r: &DeltaResult) -> serde_json::Value {
    let w = &r.witness;
    serde_json::json!({
        "delta": r.delta.to_string(),
        "delta_eighths": r.delta.units(),
        "mode": r.mode.name(),
        "witness": {
            "corners": w.triangle.corners.iter().map(|&c| point_json(c)).collect::<Vec<_>>(),
            "sides": w.triangle.sides.iter().map(|s| serde_json::json!({
                "from": s.start.to_string(),
                "to": s.end.to_string(),
                "vertex_path": s.vertex_path,
                "length": s.length.to_string(),
            })).collect::<Vec<_>>(),
            "side_index": w.side_index,
            "point": point_json(w.point),
        },
    })
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Delta(args) => {
            let g = load_graph(&args.file)?;
            let opts = DeltaOptions { geodesic_cap: geodesic_cap()? };
            let result = if args.blocks {
                delta_via_blocks_with(&g, args.mode.into(), &opts)?
            } else {
                delta_exact_with(&g, args.mode.into(), &opts)?
            };
            if args.json {
                println!("{}", serde_json::to_string(&delta_json(&result)).unwrap());
            } else {
                let w = &result.witness;
                println!("{}", result.delta);
                println!(
                    "witness: corners [{}, {}, {}], point {} on side {}",
                    w.triangle.corners[0],
                    w.triangle.corners[1],
                    w.triangle.corners[2],
                    w.point,
                    w.side_index,
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { n, m, json: _ } => {
            let report = gap_report(n, m).map_err(invalid)?;
            println!("{}", serde_json::to_string(&report).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct(cmd) => {
            let g = match cmd {
                ConstructCmd::Cactus { n, m } => triangle_cactus(n, m).map_err(invalid)?,
                ConstructCmd::KnMinus { n, parts } => {
                    let spec = CliqueRemovalSpec::new(n, parts).map_err(invalid)?;
                    kn_minus_cliques(&spec)
                }
                ConstructCmd::AOne { n, m } => a_one_witness(n, m).map_err(invalid)?,
                ConstructCmd::CycleClique { n, n0, m } => {
                    cycle_clique_witness(n, n0, m).map_err(invalid)?
                }
                ConstructCmd::Tree { n } => {
                    if n < 1 {
                        return Err(CliError::Invalid("tree needs n >= 1".into()));
                    }
                    tree_witness(n as usize)
                }
            };
            print!("{}", g.to_edge_list());
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { file, edge } => {
            let g = load_graph(&file)?;
            let decomposition =
                if edge { t_edge_decomposition(&g) } else { canonical_t_decomposition(&g) };
            println!("{}", serde_json::to_string(&decomposition).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Random { n, m, trials, seed, max_n } => {
            let stats = run_experiment(n, m, trials, seed, max_n).map_err(invalid)?;
            println!("{}", serde_json::to_string(&stats).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n } => {
            let opts = VerifyOptions { max_n, geodesic_cap: geodesic_cap()? };
            let reports = run_all(&opts);
            let mut all_passed = true;
            for report in &reports {
                println!("{report}");
                all_passed &= report.passed;
            }
            if all_passed {
                println!("verify: all {} criteria passed", reports.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verify: FAILURES detected");
                Ok(ExitCode::from(3))
            }
        }
    }
}

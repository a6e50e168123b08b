use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cisgraph::io::{parse_many, Format};
use cisgraph::Graph;

mod commands;
mod scan;

pub const SCHEMA: &str = "cisgraph/1";

#[derive(Parser)]
#[command(name = "cisgraph", version, about = "Decide and explain the CIS property of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Input file, or `-` for stdin. graph6 input may hold one graph per line.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, default_value = "graph6", value_parser = parse_format)]
    pub format: Format,
    /// Emit JSON Lines (the only output format).
    #[arg(long, default_value_t = true)]
    pub json: bool,
    /// Cross-check results against the brute-force oracles.
    #[arg(long)]
    pub verify: bool,
    /// Limit on maximal sets or matchings enumerated per graph.
    #[arg(long, default_value_t = cisgraph::oracle::DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads for multi-graph input and scans.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: cisgraph::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force CIS check with a disjoint clique/stable-set witness.
    CheckCis {
        #[command(flatten)]
        common: Common,
        /// Also search for unsettled combs and anticombs up to this size.
        #[arg(long, value_name = "K")]
        combs: Option<usize>,
    },
    /// Polynomial-time claw-free CIS recognition.
    Recognize {
        #[command(flatten)]
        common: Common,
    },
    /// Line-graph root reconstruction.
    Root {
        #[command(flatten)]
        common: Common,
    },
    /// Randomly internally matchable classification, per component.
    Rim {
        #[command(flatten)]
        common: Common,
    },
    /// Exact |V|, alpha, omega table for the triangle-gluing construction.
    Counterexample(CounterexampleArgs),
    /// Exhaustive, sampled or corpus scans with invariant checks.
    Scan(ScanArgs),
    /// |V|, alpha, omega, the alpha-omega bound and the Erdos-Hajnal exponent.
    Stats {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
pub struct CounterexampleArgs {
    /// Named base graph, e.g. `c5`, `k2`, `k3,3`.
    #[arg(long, group = "source")]
    pub base: Option<String>,
    /// Base graph in graph6.
    #[arg(long, group = "source")]
    pub base_g6: Option<String>,
    /// Random triangle-free base on this many vertices (uses --seed).
    #[arg(long, group = "source", value_name = "N")]
    pub random_base: Option<usize>,
    /// JSON recipe `{"base": <graph6>, "p": int, "seed": int}`.
    #[arg(long, group = "source")]
    pub recipe: Option<PathBuf>,
    #[arg(long, conflicts_with = "p_range")]
    pub p: Option<usize>,
    /// Inclusive range `a..b`.
    #[arg(long)]
    pub p_range: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include the built graph (graph6) in each row.
    #[arg(long)]
    pub emit_graph: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Sample,
    Corpus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Cis,
    Rim,
    ClawfreeCis,
    Domino,
    Bound,
}

#[derive(Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: Mode,
    #[arg(long, value_enum, default_value = "cis")]
    pub property: Property,
    /// Largest order; exhaustive mode allows at most 7.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    /// Smallest order (defaults to --max-n).
    #[arg(long)]
    pub min_n: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long)]
    pub connected_only: bool,
    /// Emit one line per examined graph before the summary.
    #[arg(long)]
    pub stream: bool,
}

pub fn read_graphs(common: &Common) -> anyhow::Result<Vec<Graph>> {
    let mut text = String::new();
    if common.input == "-" {
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(&common.input).with_context(|| format!("reading {}", common.input))?;
    }
    let graphs = parse_many(&text, common.format)?;
    if graphs.is_empty() {
        bail!("no graphs in input");
    }
    Ok(graphs)
}

/// Lines to print and the number of invariant violations seen.
pub struct Output {
    pub lines: Vec<Value>,
    pub violations: usize,
}

fn error_json(err: &anyhow::Error) -> Value {
    let kind = match err.downcast_ref::<cisgraph::Error>() {
        Some(cisgraph::Error::Parse { .. }) => "parse",
        Some(cisgraph::Error::CapExceeded { .. }) => "cap_exceeded",
        Some(cisgraph::Error::NullGraph) => "null_graph",
        Some(cisgraph::Error::VertexOutOfRange { .. }) => "vertex_out_of_range",
        Some(cisgraph::Error::InvalidParameter(_)) => "invalid_parameter",
        Some(cisgraph::Error::Precondition(_)) => "precondition",
        None => "io",
    };
    json!({ "schema": SCHEMA, "error": { "kind": kind, "message": format!("{err:#}") } })
}

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<Output> {
    match cli.command {
        Command::CheckCis { common, combs } => commands::check_cis(&common, combs),
        Command::Recognize { common } => commands::recognize(&common),
        Command::Root { common } => commands::root(&common),
        Command::Rim { common } => commands::rim(&common),
        Command::Stats { common } => commands::stats(&common),
        Command::Counterexample(args) => commands::counterexample(&args),
        Command::Scan(args) => scan::scan(&args, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(output) => {
            for line in &output.lines {
                if writeln!(out, "{line}").is_err() {
                    return ExitCode::from(2);
                }
            }
            if output.violations > 0 {
                eprintln!("cisgraph: {} invariant violation(s)", output.violations);
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            let _ = writeln!(out, "{}", error_json(&err));
            eprintln!("cisgraph: {err:#}");
            ExitCode::from(2)
        }
    }
}

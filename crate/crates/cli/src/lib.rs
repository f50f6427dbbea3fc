//! The `chordal` command line tool.
//!
//! Subcommands: `check` (chordality verdict), `order` (search orderings),
//! `verify` (check an ordering against a property), `gen` (benchmark
//! graphs) and `bench` (timing matrix as CSV). Exit codes are 0 for success
//! or a chordal graph, 1 for a failed property or a non-chordal graph, and 2
//! for usage, input or internal errors.

mod bench;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use chordal_core::generators::{GenParams, GraphClass};
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use bench::{run_bench, to_csv, BenchRow, BenchSpec, Phase, Pipeline, CSV_HEADER};
pub use commands::{cmd_check, cmd_gen, cmd_order, cmd_verify};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{context}: {source}")]
    Input {
        context: String,
        #[source]
        source: chordal_core::Error,
    },
    #[error(transparent)]
    Core(#[from] chordal_core::Error),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error(
        "pipelines disagree on {class} n={n} rep={rep}: seq-partition says {sequential}, parallel says {parallel}"
    )]
    Disagreement {
        class: GraphClass,
        n: usize,
        rep: usize,
        sequential: bool,
        parallel: bool,
    },
}

#[derive(Debug, Parser)]
#[command(name = "chordal", version, about = "Chordal graph recognition via LexBFS")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a graph is chordal.
    Check(CheckArgs),
    /// Compute a vertex ordering.
    Order(OrderArgs),
    /// Check an ordering against Property B, Property LB or the PEO definition.
    Verify(VerifyArgs),
    /// Generate a benchmark graph.
    Gen(GenArgs),
    /// Time the sequential and parallel pipelines over a matrix of graphs.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckAlgo {
    SeqLabels,
    SeqPartition,
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderAlgo {
    Bfs,
    LexbfsLabels,
    LexbfsPartition,
    Mcs,
    ParallelLexbfs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    B,
    Lb,
    Peo,
}

#[derive(Debug, clap::Args)]
pub struct CheckArgs {
    /// Graph file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "seq-partition")]
    pub algo: CheckAlgo,
    /// Tie-break seed (sequential) or arbitration seed (parallel). Without
    /// it, the lowest vertex id wins.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads for the parallel pipeline.
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, clap::Args)]
pub struct OrderArgs {
    /// Graph file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "lexbfs-partition")]
    pub algo: OrderAlgo,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Ordering file to write; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Graph file.
    pub input: PathBuf,
    /// Ordering file.
    pub order: PathBuf,
    #[arg(long, value_enum)]
    pub property: Property,
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    #[arg(value_parser = parse_class)]
    pub class: GraphClass,
    pub n: usize,
    /// `p=<probability>` for dense graphs, `k=<clique size>` for chordal ones.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<GenParam>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Graph file to write; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', value_parser = parse_class, default_value = "clique,dense,sparse,tree,chordal")]
    pub classes: Vec<GraphClass>,
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000")]
    pub sizes: Vec<usize>,
    /// Measured repetitions per cell, after one discarded warm-up run.
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// Base seed; repetition `r` uses `seed + r` for generation and for the
    /// parallel arbitration.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<GenParam>,
    /// CSV file to write; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenParam {
    P(f64),
    K(usize),
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    s.parse()
}

fn parse_param(s: &str) -> Result<GenParam, String> {
    let (key, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected k=<int> or p=<float>, got `{s}`"))?;
    match key {
        "p" => value.parse().map(GenParam::P).map_err(|e| format!("p: {e}")),
        "k" => value.parse().map(GenParam::K).map_err(|e| format!("k: {e}")),
        _ => Err(format!("unknown parameter `{key}` (expected k or p)")),
    }
}

pub fn gen_params(params: &[GenParam]) -> GenParams {
    let mut out = GenParams::default();
    for p in params {
        match *p {
            GenParam::P(p) => out.p = Some(p),
            GenParam::K(k) => out.k = Some(k),
        }
    }
    out
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Check(args) => cmd_check(args, out),
        Command::Order(args) => cmd_order(args, out).map(|()| 0),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Gen(args) => cmd_gen(args, out).map(|()| 0),
        Command::Bench(args) => bench::cmd_bench(args, out, err).map(|()| 0),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

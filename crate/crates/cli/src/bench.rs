use std::fmt;
use std::io::Write;
use std::time::Instant;

use chordal_core::generators::{generate, GenParams, GraphClass};
use chordal_core::io::{parse_graph_text_with_limit, write_graph_text};
use chordal_core::Graph;

use crate::commands::{millis, run_check, write_text};
use crate::{gen_params, BenchArgs, CheckAlgo, CliError};

pub const CSV_HEADER: &str = "class,n,m,algo,rep,seed,phase,ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    SeqPartition,
    Parallel,
}

impl Pipeline {
    pub const ALL: [Pipeline; 2] = [Self::SeqPartition, Self::Parallel];

    pub fn name(self) -> &'static str {
        match self {
            Self::SeqPartition => "seq-partition",
            Self::Parallel => "parallel",
        }
    }

    fn check_algo(self) -> CheckAlgo {
        match self {
            Self::SeqPartition => CheckAlgo::SeqPartition,
            Self::Parallel => CheckAlgo::Parallel,
        }
    }
}

/// `total` includes parsing the graph text; `algorithm` covers only the
/// search and the PEO test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Total,
    Algorithm,
}

impl Phase {
    pub fn name(self) -> &'static str {
        match self {
            Self::Total => "total",
            Self::Algorithm => "algorithm",
        }
    }
}

/// One CSV data row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub class: GraphClass,
    pub n: usize,
    pub m: usize,
    pub algo: Pipeline,
    pub rep: usize,
    pub seed: u64,
    pub phase: Phase,
    pub ms: f64,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{},{},{:.3}",
            self.class,
            self.n,
            self.m,
            self.algo.name(),
            self.rep,
            self.seed,
            self.phase.name(),
            self.ms
        )
    }
}

/// The benchmark matrix. Repetition `r` of a cell generates its graph with
/// `seed + r` and runs the parallel pipeline under that arbitration seed;
/// the sequential pipeline uses the lowest-index tie-break.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub classes: Vec<GraphClass>,
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub workers: Option<usize>,
    pub params: GenParams,
}

impl From<&BenchArgs> for BenchSpec {
    fn from(args: &BenchArgs) -> Self {
        Self {
            classes: args.classes.clone(),
            sizes: args.sizes.clone(),
            reps: args.reps,
            seed: args.seed,
            workers: args.workers,
            params: gen_params(&args.params),
        }
    }
}

struct Timing {
    total_ms: f64,
    algorithm_ms: f64,
    chordal: bool,
}

fn time_pipeline(
    text: &str,
    n: usize,
    pipeline: Pipeline,
    seed: u64,
    workers: Option<usize>,
) -> Result<Timing, CliError> {
    let start = Instant::now();
    let g = parse_graph_text_with_limit(text, n.max(1))?;
    let parsed = Instant::now();
    let seed = (pipeline == Pipeline::Parallel).then_some(seed);
    let verdict = run_check(&g, pipeline.check_algo(), seed, workers)?;
    let done = Instant::now();
    Ok(Timing {
        total_ms: millis(done - start),
        algorithm_ms: millis(done - parsed),
        chordal: verdict.is_chordal(),
    })
}

/// Runs both pipelines on `g` and fails if their verdicts differ.
fn time_both(
    g: &Graph,
    class: GraphClass,
    rep: usize,
    seed: u64,
    workers: Option<usize>,
) -> Result<[Timing; 2], CliError> {
    let text = write_graph_text(g);
    let n = g.vertex_count();
    let sequential = time_pipeline(&text, n, Pipeline::SeqPartition, seed, workers)?;
    let parallel = time_pipeline(&text, n, Pipeline::Parallel, seed, workers)?;
    if sequential.chordal != parallel.chordal {
        return Err(CliError::Disagreement {
            class,
            n,
            rep,
            sequential: sequential.chordal,
            parallel: parallel.chordal,
        });
    }
    Ok([sequential, parallel])
}

/// Runs the matrix, logging one summary line per cell to `log`.
pub fn run_bench(spec: &BenchSpec, log: &mut dyn Write) -> Result<Vec<BenchRow>, CliError> {
    let mut rows = Vec::new();
    for &class in &spec.classes {
        for &n in &spec.sizes {
            let mut algorithm_ms = [0.0f64; 2];
            let mut m = 0;
            for rep in 0..spec.reps {
                let seed = spec.seed.wrapping_add(rep as u64);
                let g = generate(class, n, spec.params, seed)?;
                m = g.edge_count();
                if rep == 0 {
                    time_both(&g, class, rep, seed, spec.workers)?;
                }
                let timings = time_both(&g, class, rep, seed, spec.workers)?;
                for (algo, timing) in Pipeline::ALL.into_iter().zip(&timings) {
                    for (phase, ms) in [(Phase::Total, timing.total_ms), (Phase::Algorithm, timing.algorithm_ms)] {
                        rows.push(BenchRow {
                            class,
                            n,
                            m,
                            algo,
                            rep,
                            seed,
                            phase,
                            ms,
                        });
                    }
                }
                for (sum, timing) in algorithm_ms.iter_mut().zip(&timings) {
                    *sum += timing.algorithm_ms;
                }
            }
            let reps = spec.reps.max(1) as f64;
            writeln!(
                log,
                "{class} n={n} m={m}: seq-partition {:.1} ms, parallel {:.1} ms (mean algorithm time)",
                algorithm_ms[0] / reps,
                algorithm_ms[1] / reps
            )?;
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for row in rows {
        csv.push_str(&row.to_string());
        csv.push('\n');
    }
    csv
}

pub(crate) fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, log: &mut dyn Write) -> Result<(), CliError> {
    let rows = run_bench(&BenchSpec::from(args), log)?;
    let csv = to_csv(&rows);
    match &args.out {
        Some(path) => write_text(path, &csv),
        None => Ok(out.write_all(csv.as_bytes())?),
    }
}

use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use chordal_core::generators::generate;
use chordal_core::io::{parse_graph_text, parse_ordering_text, write_graph_text, write_ordering_text};
use chordal_core::oracle::{satisfies_b_property, satisfies_lb_property, PropertyCheck};
use chordal_core::{
    bfs_order, is_chordal, is_peo, lexbfs_labels, lexbfs_partition, mcs_order, parallel_is_chordal, parallel_lexbfs,
    Arbitration, ChordalityVerdict, Graph, LexBfsVariant, ParallelConfig, PeoCheck, TieBreak,
};

use crate::{gen_params, CheckAlgo, CheckArgs, CliError, GenArgs, OrderAlgo, OrderArgs, Property, VerifyArgs};

pub(crate) fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph_text(&read_text(path)?).map_err(|source| CliError::Input {
        context: path.display().to_string(),
        source,
    })
}

pub(crate) fn parallel_config(seed: Option<u64>, workers: Option<usize>) -> ParallelConfig {
    ParallelConfig {
        workers,
        ..ParallelConfig::new(Arbitration::from_seed(seed))
    }
}

pub(crate) fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Runs one chordality pipeline on a parsed graph.
pub(crate) fn run_check(
    g: &Graph,
    algo: CheckAlgo,
    seed: Option<u64>,
    workers: Option<usize>,
) -> Result<ChordalityVerdict, CliError> {
    let tie_break = TieBreak::from_seed(seed);
    Ok(match algo {
        CheckAlgo::SeqLabels => is_chordal(g, LexBfsVariant::Labels, tie_break),
        CheckAlgo::SeqPartition => is_chordal(g, LexBfsVariant::Partition, tie_break),
        CheckAlgo::Parallel => parallel_is_chordal(g, &parallel_config(seed, workers))?,
    })
}

/// Prints the verdict report; returns 0 for chordal and 1 otherwise.
pub fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = read_text(&args.input)?;
    let start = Instant::now();
    let g = parse_graph_text(&text).map_err(|source| CliError::Input {
        context: args.input.display().to_string(),
        source,
    })?;
    let parsed = Instant::now();
    let verdict = run_check(&g, args.algo, args.seed, args.workers)?;
    let done = Instant::now();
    match &verdict {
        ChordalityVerdict::Chordal { peo } => {
            writeln!(out, "chordal: yes")?;
            writeln!(out, "peo: {peo}")?;
        }
        ChordalityVerdict::NotChordal { order, witness } => {
            writeln!(out, "chordal: no")?;
            writeln!(out, "order: {order}")?;
            writeln!(out, "witness: {witness}")?;
        }
    }
    writeln!(out, "parse_ms: {:.3}", millis(parsed - start))?;
    writeln!(out, "algorithm_ms: {:.3}", millis(done - parsed))?;
    Ok(if verdict.is_chordal() { 0 } else { 1 })
}

pub fn cmd_order(args: &OrderArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = load_graph(&args.input)?;
    let tie_break = TieBreak::from_seed(args.seed);
    let ord = match args.algo {
        OrderAlgo::Bfs => bfs_order(&g, tie_break),
        OrderAlgo::LexbfsLabels => lexbfs_labels(&g, tie_break),
        OrderAlgo::LexbfsPartition => lexbfs_partition(&g, tie_break),
        OrderAlgo::Mcs => mcs_order(&g, tie_break),
        OrderAlgo::ParallelLexbfs => parallel_lexbfs(&g, &parallel_config(args.seed, args.workers))?,
    };
    let text = write_ordering_text(&ord);
    match &args.out {
        Some(path) => write_text(path, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Prints whether the ordering has the property; returns 0 if it holds and
/// 1 otherwise.
pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&args.input)?;
    let ord = parse_ordering_text(&read_text(&args.order)?, g.vertex_count()).map_err(|source| CliError::Input {
        context: args.order.display().to_string(),
        source,
    })?;
    let name = match args.property {
        Property::B => "b",
        Property::Lb => "lb",
        Property::Peo => "peo",
    };
    let holds = match args.property {
        Property::B | Property::Lb => {
            let check = if args.property == Property::B {
                satisfies_b_property(&g, &ord)?
            } else {
                satisfies_lb_property(&g, &ord)?
            };
            match check {
                PropertyCheck::Holds => true,
                PropertyCheck::Violated(v) => {
                    let (a, b, c) = v.positions;
                    let (x, y, z) = v.vertices;
                    writeln!(
                        out,
                        "property {name}: violated at positions {} {} {} (vertices {} {} {})",
                        a + 1,
                        b + 1,
                        c + 1,
                        x + 1,
                        y + 1,
                        z + 1
                    )?;
                    false
                }
            }
        }
        Property::Peo => match is_peo(&g, &ord)? {
            PeoCheck::Perfect => true,
            PeoCheck::Violated(w) => {
                writeln!(out, "property peo: violated")?;
                writeln!(out, "witness: {w}")?;
                false
            }
        },
    };
    if holds {
        writeln!(out, "property {name}: holds")?;
        Ok(0)
    } else {
        Ok(1)
    }
}

/// Writes the generated graph to `--out` (or `out`) and reports its size.
pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = generate(args.class, args.n, gen_params(&args.params), args.seed)?;
    let text = write_graph_text(&g);
    match &args.out {
        Some(path) => {
            write_text(path, &text)?;
            writeln!(out, "n: {}", g.vertex_count())?;
            writeln!(out, "m: {}", g.edge_count())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

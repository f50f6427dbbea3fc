//! Acceptance run: every criterion prints one PASS/FAIL line and the process
//! exits non-zero if any criterion fails.

use std::time::Instant;

use chordal_cli::{run_bench, BenchRow, BenchSpec, Phase, Pipeline};
use chordal_core::generators::{
    gen_chordal_random, gen_clique, gen_dense_random, gen_sparse_random, gen_tree, GenParams, GraphClass,
    DEFAULT_CHORDAL_K,
};
use chordal_core::oracle::{is_chordal_bruteforce, satisfies_b_property, satisfies_lb_property};
use chordal_core::parallel::parallel_lexbfs_run;
use chordal_core::rng::SeededRng;
use chordal_core::{
    bfs_order, is_chordal, is_peo, lexbfs_labels, lexbfs_partition, mcs_order, parallel_is_chordal, parallel_lexbfs,
    Arbitration, ChordalityVerdict, Graph, LexBfsVariant, ParallelConfig, PeoCheck, TieBreak, VertexOrdering,
};

const CORPUS_STREAM: u64 = 0xacce_0001;
const INVARIANT_STREAM: u64 = 0xacce_0004;
const RANDOM_GRAPHS_PER_SIZE: usize = 10_000;

type Outcome = Result<String, String>;

/// Tally of non-chordal evidence seen by every criterion.
#[derive(Default)]
struct Witnesses {
    checked: usize,
    invalid: Vec<String>,
}

impl Witnesses {
    fn verdict(&mut self, g: &Graph, verdict: &ChordalityVerdict, source: &str) {
        if let ChordalityVerdict::NotChordal { order, witness } = verdict {
            self.record(g, order, witness.is_valid(g, order), source);
        }
    }

    fn check(&mut self, g: &Graph, order: &VertexOrdering, check: &PeoCheck, source: &str) {
        if let PeoCheck::Violated(w) = check {
            self.record(g, order, w.is_valid(g, order), source);
        }
    }

    fn record(&mut self, g: &Graph, order: &VertexOrdering, valid: bool, source: &str) {
        self.checked += 1;
        if !valid && self.invalid.len() < 5 {
            self.invalid
                .push(format!("{source}: n={} order {order}", g.vertex_count()));
        }
    }
}

struct Corpus {
    graphs: Vec<Graph>,
    chordal: Vec<bool>,
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

fn random_graph(n: usize, rng: &mut SeededRng) -> Graph {
    let p = [0.2, 0.35, 0.5, 0.7, 0.85][rng.index(5)];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn build_corpus() -> Corpus {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(all_graphs).collect();
    let mut rng = SeededRng::new(2013, CORPUS_STREAM);
    for n in [6, 8] {
        graphs.extend((0..RANDOM_GRAPHS_PER_SIZE).map(|_| random_graph(n, &mut rng)));
    }
    let chordal = graphs.iter().map(|g| is_chordal_bruteforce(g).unwrap()).collect();
    Corpus { graphs, chordal }
}

fn arbitration(seed: u64) -> ParallelConfig {
    ParallelConfig::new(Arbitration::Seeded(seed))
}

fn criterion_1(corpus: &Corpus, witnesses: &mut Witnesses) -> Outcome {
    let mut runs = 0;
    for (g, &truth) in corpus.graphs.iter().zip(&corpus.chordal) {
        for variant in [LexBfsVariant::Labels, LexBfsVariant::Partition] {
            let verdict = is_chordal(g, variant, TieBreak::LowestIndex);
            witnesses.verdict(g, &verdict, "sequential");
            if verdict.is_chordal() != truth {
                return Err(format!("{variant:?} disagrees with brute force on {g:?}"));
            }
            runs += 1;
        }
        for seed in 0..5 {
            let verdict = parallel_is_chordal(g, &arbitration(seed)).map_err(|e| e.to_string())?;
            witnesses.verdict(g, &verdict, "parallel");
            if verdict.is_chordal() != truth {
                return Err(format!("parallel (seed {seed}) disagrees with brute force on {g:?}"));
            }
            runs += 1;
        }
    }
    let chordal = corpus.chordal.iter().filter(|&&c| c).count();
    Ok(format!(
        "{} graphs ({chordal} chordal), {runs} pipeline runs agree with brute force",
        corpus.graphs.len()
    ))
}

fn criterion_2(corpus: &Corpus) -> Outcome {
    let mut checked = 0;
    for g in &corpus.graphs {
        for seed in 0..10u64 {
            let tie_break = TieBreak::Seeded(seed);
            let bfs = bfs_order(g, tie_break);
            if !satisfies_b_property(g, &bfs).unwrap().holds() {
                return Err(format!("BFS order {bfs} fails property B on {g:?}"));
            }
            let lex = [
                ("lexbfs_labels", lexbfs_labels(g, tie_break)),
                ("lexbfs_partition", lexbfs_partition(g, tie_break)),
                (
                    "parallel_lexbfs",
                    parallel_lexbfs(g, &arbitration(seed)).map_err(|e| e.to_string())?,
                ),
            ];
            for (name, ord) in lex {
                if !satisfies_lb_property(g, &ord).unwrap().holds() {
                    return Err(format!("{name} order {ord} fails property LB on {g:?}"));
                }
            }
            checked += 4;
        }
    }
    Ok(format!("{checked} orders satisfy their property"))
}

fn criterion_3(corpus: &Corpus, witnesses: &mut Witnesses) -> Outcome {
    for (g, &truth) in corpus.graphs.iter().zip(&corpus.chordal) {
        let ord = mcs_order(g, TieBreak::LowestIndex);
        let check = is_peo(g, &ord).unwrap();
        witnesses.check(g, &ord, &check, "mcs");
        if check.is_perfect() != truth {
            return Err(format!("MCS order {ord} misjudges {g:?}"));
        }
    }
    Ok(format!("{} MCS orders match brute force", corpus.graphs.len()))
}

fn criterion_4(witnesses: &mut Witnesses) -> Outcome {
    let mut rng = SeededRng::new(64, INVARIANT_STREAM);
    let mut runs = 0;
    let mut contested = 0;
    let mut iterations = 0;
    for _ in 0..200 {
        let n = 1 + rng.index(64);
        let g = random_graph(n, &mut rng);
        for seed in 0..10u64 {
            let config = ParallelConfig {
                audit: true,
                workers: Some(1 + (seed as usize % 2)),
                ..arbitration(seed)
            };
            let run = parallel_lexbfs_run(&g, &config).map_err(|e| format!("n={n} seed={seed}: {e}"))?;
            let audit = run.audit.ok_or("audited run returned no summary")?;
            contested += audit.contested_current;
            iterations += audit.iterations;
            if !satisfies_lb_property(&g, &run.order).unwrap().holds() {
                return Err(format!("audited order {} fails property LB", run.order));
            }
            let verdict = parallel_is_chordal(&g, &config).map_err(|e| e.to_string())?;
            witnesses.verdict(&g, &verdict, "audited parallel");
            runs += 1;
        }
    }
    Ok(format!(
        "{runs} audited runs, {iterations} iterations, {contested} contested current writes, no invariant violations"
    ))
}

fn criterion_5(witnesses: &mut Witnesses) -> Outcome {
    for n in [1, 2, 10, 1000] {
        let m = gen_clique(n).unwrap().edge_count();
        if m != n * (n - 1) / 2 {
            return Err(format!("clique n={n} has m={m}"));
        }
    }
    for (n, seed) in [(41, 1), (1000, 2), (10_000, 3)] {
        let m = gen_sparse_random(n, seed).unwrap().edge_count();
        if m != 20 * n {
            return Err(format!("sparse n={n} has m={m}"));
        }
    }
    for (n, seed) in [(1, 0), (2, 0), (100, 1), (10_000, 2)] {
        let tree = gen_tree(n, seed).unwrap();
        if tree.edge_count() != n - 1 || !is_connected(&tree) {
            return Err(format!("tree n={n} seed={seed} is not a spanning tree"));
        }
    }
    let dense = gen_dense_random(200, 0.5, 9).unwrap();
    if dense.edge_count() == 0 || dense.edge_count() == 200 * 199 / 2 {
        return Err("dense generator produced a degenerate graph".into());
    }
    let mut checked = 0;
    for n in [16, 64, 256] {
        for seed in 0..100 {
            let k = DEFAULT_CHORDAL_K.min(n - 1);
            let g = gen_chordal_random(n, k, seed).unwrap();
            if !is_chordal_bruteforce(&g).unwrap() {
                return Err(format!("chordal generator n={n} seed={seed} is not chordal"));
            }
            for variant in [LexBfsVariant::Labels, LexBfsVariant::Partition] {
                let verdict = is_chordal(&g, variant, TieBreak::Seeded(seed));
                witnesses.verdict(&g, &verdict, "generator");
                if !verdict.is_chordal() {
                    return Err(format!("{variant:?} rejects chordal generator n={n} seed={seed}"));
                }
            }
            let verdict = parallel_is_chordal(&g, &arbitration(seed)).map_err(|e| e.to_string())?;
            witnesses.verdict(&g, &verdict, "generator");
            if !verdict.is_chordal() {
                return Err(format!("parallel rejects chordal generator n={n} seed={seed}"));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "size contracts hold, {checked} generated chordal graphs accepted by all pipelines"
    ))
}

fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn min_algorithm_ms(rows: &[BenchRow], class: GraphClass, n: usize, algo: Pipeline) -> f64 {
    rows.iter()
        .filter(|r| r.class == class && r.n == n && r.algo == algo && r.phase == Phase::Algorithm)
        .map(|r| r.ms)
        .fold(f64::INFINITY, f64::min)
}

fn criterion_6() -> Outcome {
    let mut log = Vec::new();
    let ladder = BenchSpec {
        classes: vec![GraphClass::Clique],
        sizes: vec![1000, 2000, 4000],
        reps: 3,
        seed: 0,
        workers: None,
        params: GenParams::default(),
    };
    let rows = run_bench(&ladder, &mut log).map_err(|e| format!("clique ladder: {e}"))?;
    let small = min_algorithm_ms(&rows, GraphClass::Clique, 1000, Pipeline::SeqPartition);
    let large = min_algorithm_ms(&rows, GraphClass::Clique, 4000, Pipeline::SeqPartition);
    let scaling = large / small;

    let stability = BenchSpec {
        classes: vec![GraphClass::Sparse, GraphClass::Dense],
        sizes: vec![10_000],
        reps: 1,
        ..ladder
    };
    let rows = run_bench(&stability, &mut log).map_err(|e| format!("stability run: {e}"))?;
    let sparse = min_algorithm_ms(&rows, GraphClass::Sparse, 10_000, Pipeline::Parallel);
    let dense = min_algorithm_ms(&rows, GraphClass::Dense, 10_000, Pipeline::Parallel);
    let spread = sparse.max(dense) / sparse.min(dense);

    let detail = format!(
        "(a) clique ladder verdicts agree; (b) seq-partition clique time ratio 4000/1000 = {scaling:.1} (limit 25); \
         (c) parallel sparse {sparse:.0} ms vs dense {dense:.0} ms, spread {spread:.2}x (limit 3x)"
    );
    for line in String::from_utf8_lossy(&log).lines() {
        println!("    bench {line}");
    }
    if scaling <= 25.0 && spread < 3.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_7(witnesses: &Witnesses) -> Outcome {
    if witnesses.checked == 0 {
        return Err("no non-chordal verdicts were produced".into());
    }
    if witnesses.invalid.is_empty() {
        Ok(format!(
            "{} witness triples verified against the adjacency matrix",
            witnesses.checked
        ))
    } else {
        Err(format!("invalid witnesses: {}", witnesses.invalid.join("; ")))
    }
}

fn report(number: usize, name: &str, started: Instant, outcome: &Outcome) -> bool {
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => println!("PASS criterion {number} ({name}, {secs:.1} s): {detail}"),
        Err(detail) => println!("FAIL criterion {number} ({name}, {secs:.1} s): {detail}"),
    }
    outcome.is_ok()
}

fn main() {
    let mut witnesses = Witnesses::default();
    let mut passed = Vec::new();

    let started = Instant::now();
    let corpus = build_corpus();
    println!(
        "corpus: {} graphs built in {:.1} s",
        corpus.graphs.len(),
        started.elapsed().as_secs_f64()
    );

    let t = Instant::now();
    passed.push(report(
        1,
        "oracle equivalence",
        t,
        &criterion_1(&corpus, &mut witnesses),
    ));
    let t = Instant::now();
    passed.push(report(2, "order properties", t, &criterion_2(&corpus)));
    let t = Instant::now();
    passed.push(report(
        3,
        "maximum cardinality search",
        t,
        &criterion_3(&corpus, &mut witnesses),
    ));
    let t = Instant::now();
    passed.push(report(4, "parallel engine invariants", t, &criterion_4(&mut witnesses)));
    let t = Instant::now();
    passed.push(report(5, "generator contracts", t, &criterion_5(&mut witnesses)));
    let t = Instant::now();
    passed.push(report(6, "benchmark shape", t, &criterion_6()));
    let t = Instant::now();
    passed.push(report(7, "witness validity", t, &criterion_7(&witnesses)));

    let failures = passed.iter().filter(|&&ok| !ok).count();
    println!(
        "acceptance: {} of {} criteria passed",
        passed.len() - failures,
        passed.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}

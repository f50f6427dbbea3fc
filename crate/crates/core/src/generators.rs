//! Seeded generators for the benchmark graph classes.
//!
//! Every generator is a pure function of its parameters and seed; all
//! randomness comes from [`SeededRng`] with a per-generator stream.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, DEFAULT_MAX_VERTICES};
use crate::rng::{streams, SeededRng};

/// Edges per vertex in [`gen_sparse_random`].
pub const SPARSE_EDGE_FACTOR: usize = 20;
/// Edge probability used for the dense class when none is given.
pub const DEFAULT_DENSE_P: f64 = 0.5;
/// Clique-attach size used for the chordal class when none is given,
/// capped at `n - 1`.
pub const DEFAULT_CHORDAL_K: usize = 20;

/// Complete graph on `n >= 1` vertices.
pub fn gen_clique(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("a clique needs at least one vertex".into()));
    }
    if n > DEFAULT_MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            n,
            limit: DEFAULT_MAX_VERTICES,
        });
    }
    let mut offsets = Vec::with_capacity(n + 1);
    let mut targets = Vec::with_capacity(n * (n - 1));
    offsets.push(0);
    for u in 0..n as u32 {
        targets.extend((0..n as u32).filter(|&v| v != u));
        offsets.push(targets.len());
    }
    Ok(Graph::from_sorted_adjacency(n, offsets, targets))
}

/// Each of the `n(n-1)/2` pairs becomes an edge independently with
/// probability `p`, pairs drawn in ascending `(u, v)` order.
pub fn gen_dense_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = SeededRng::new(seed, streams::DENSE);
    let mut builder = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                builder.add_edge(u, v)?;
            }
        }
    }
    Ok(builder.build())
}

/// Exactly `20n` distinct edges, uniformly without replacement: random pairs
/// are drawn and rejected when they are loops or already present.
pub fn gen_sparse_random(n: usize, seed: u64) -> Result<Graph> {
    let m = SPARSE_EDGE_FACTOR * n;
    if n < 2 * SPARSE_EDGE_FACTOR + 1 {
        return Err(Error::InvalidSize(format!(
            "{m} edges do not fit on {n} vertices; need n >= {}",
            2 * SPARSE_EDGE_FACTOR + 1
        )));
    }
    let mut rng = SeededRng::new(seed, streams::SPARSE);
    let mut builder = GraphBuilder::new(n)?;
    while builder.edge_count() < m {
        let u = rng.index(n);
        let v = rng.index(n);
        if u != v {
            builder.add_edge(u, v)?;
        }
    }
    Ok(builder.build())
}

/// Uniform random labeled tree, decoded from a random Prüfer sequence.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("a tree needs at least one vertex".into()));
    }
    let mut builder = GraphBuilder::new(n)?;
    if n == 2 {
        builder.add_edge(0, 1)?;
    }
    if n <= 2 {
        return Ok(builder.build());
    }
    let mut rng = SeededRng::new(seed, streams::TREE);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.index(n)).collect();
    let mut remaining = vec![1usize; n];
    for &c in &code {
        remaining[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        builder.add_edge(leaf, c)?;
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    builder.add_edge(a, b)?;
    Ok(builder.build())
}

/// Random chordal graph built along a perfect elimination ordering.
///
/// Vertices arrive in order `0..n` and the graph is kept as a set of
/// cliques, each vertex remembering the clique it was placed in. Vertex `i`
/// picks a random earlier vertex `v` with home clique `Q`, draws a target
/// size `k'` uniformly from `k..=k + k/2`, and connects to a random subset
/// `S` of `Q` with `|S| = min(k', |Q|)`. When `S` is all of `Q`, `i` joins `Q`;
/// otherwise `S ∪ {i}` becomes a new clique with home `i`. Every `S` is a
/// clique, so `0..n` is a perfect elimination ordering.
///
/// `k = 0` yields an edgeless graph and `k = n - 1` a complete one.
pub fn gen_chordal_random(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("a graph needs at least one vertex".into()));
    }
    if k >= n {
        return Err(Error::InvalidSize(format!("clique size {k} must be below n = {n}")));
    }
    let mut rng = SeededRng::new(seed, streams::CHORDAL);
    let mut builder = GraphBuilder::new(n)?;
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut home = vec![0usize; n];
    let mut pool = Vec::new();
    for i in 1..n {
        let v = rng.index(i);
        let q = home[v];
        let target = k + rng.index(k / 2 + 1);
        let size = target.min(cliques[q].len());
        if size == cliques[q].len() {
            for &u in &cliques[q] {
                builder.add_edge(i, u)?;
            }
            cliques[q].push(i);
            home[i] = q;
        } else {
            pool.clear();
            pool.extend_from_slice(&cliques[q]);
            for j in 0..size {
                let pick = j + rng.index(pool.len() - j);
                pool.swap(j, pick);
            }
            let mut clique = pool[..size].to_vec();
            for &u in &clique {
                builder.add_edge(i, u)?;
            }
            clique.push(i);
            home[i] = cliques.len();
            cliques.push(clique);
        }
    }
    Ok(builder.build())
}

/// The benchmark graph classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Clique,
    Dense,
    Sparse,
    Tree,
    Chordal,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [Self::Clique, Self::Dense, Self::Sparse, Self::Tree, Self::Chordal];

    pub fn name(self) -> &'static str {
        match self {
            Self::Clique => "clique",
            Self::Dense => "dense",
            Self::Sparse => "sparse",
            Self::Tree => "tree",
            Self::Chordal => "chordal",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown graph class `{s}` (expected clique, dense, sparse, tree or chordal)"))
    }
}

/// Optional class parameters: `p` for dense graphs, `k` for chordal ones.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct GenParams {
    pub p: Option<f64>,
    pub k: Option<usize>,
}

/// Generates a graph of `class`; parameters a class does not use are ignored.
pub fn generate(class: GraphClass, n: usize, params: GenParams, seed: u64) -> Result<Graph> {
    match class {
        GraphClass::Clique => gen_clique(n),
        GraphClass::Dense => gen_dense_random(n, params.p.unwrap_or(DEFAULT_DENSE_P), seed),
        GraphClass::Sparse => gen_sparse_random(n, seed),
        GraphClass::Tree => gen_tree(n, seed),
        GraphClass::Chordal => {
            let k = params.k.unwrap_or_else(|| DEFAULT_CHORDAL_K.min(n.saturating_sub(1)));
            gen_chordal_random(n, k, seed)
        }
    }
}

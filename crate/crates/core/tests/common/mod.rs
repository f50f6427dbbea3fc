#![allow(dead_code)]

use chordal_core::rng::SeededRng;
use chordal_core::{Graph, VertexOrdering};
use proptest::prelude::*;

pub fn graph(n: usize, one_based: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, one_based.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
}

pub fn ordering(one_based: &[usize]) -> VertexOrdering {
    VertexOrdering::new(one_based.iter().map(|v| v - 1).collect()).unwrap()
}

/// Every labeled graph on `n` vertices, one per subset of the vertex pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
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

/// Random graph with a random edge density.
pub fn random_graph(n: usize, rng: &mut SeededRng) -> Graph {
    let p = [0.2, 0.35, 0.5, 0.7, 0.85][rng.index(5)];
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.bernoulli(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_ordering(n: usize, rng: &mut SeededRng) -> VertexOrdering {
    VertexOrdering::new(rng.permutation(n)).unwrap()
}

/// Graphs on up to `max_n` vertices with arbitrary edge sets.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph together with a permutation of its vertices.
pub fn arb_graph_and_ordering(max_n: usize) -> impl Strategy<Value = (Graph, VertexOrdering)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(g, order)| (g, VertexOrdering::new(order).unwrap()))
    })
}

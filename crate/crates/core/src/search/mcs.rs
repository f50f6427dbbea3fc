use std::collections::BTreeSet;

use super::{with_tie_break, TieBreak};
use crate::graph::{Graph, VertexOrdering};

/// Maximum cardinality search: repeatedly numbers an unnumbered vertex with
/// the most numbered neighbors, the smallest id among ties.
pub fn mcs_order(g: &Graph, tie_break: TieBreak) -> VertexOrdering {
    with_tie_break(g, tie_break, run)
}

fn run(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut count = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n.max(1)];
    buckets[0].extend(0..n);
    let mut best = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[best].is_empty() {
            best -= 1;
        }
        let x = buckets[best].pop_first().expect("bucket is nonempty");
        numbered[x] = true;
        order.push(x);
        for y in g.neighbors(x) {
            if !numbered[y] {
                buckets[count[y]].remove(&y);
                count[y] += 1;
                buckets[count[y]].insert(y);
                best = best.max(count[y]);
            }
        }
    }
    order
}

use std::collections::VecDeque;

use super::{with_tie_break, TieBreak};
use crate::graph::{Graph, VertexOrdering};

/// Breadth-first search numbering. With `LowestIndex` the queue is FIFO,
/// neighbors are enqueued in ascending order and every restart picks the
/// smallest unnumbered vertex.
pub fn bfs_order(g: &Graph, tie_break: TieBreak) -> VertexOrdering {
    with_tie_break(g, tie_break, bfs_lowest_index)
}

fn bfs_lowest_index(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let mut next_start = 0;
    while order.len() < n {
        let x = match queue.pop_front() {
            Some(x) => x,
            None => {
                while seen[next_start] {
                    next_start += 1;
                }
                seen[next_start] = true;
                next_start
            }
        };
        order.push(x);
        for y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_order(&p3, TieBreak::LowestIndex).as_slice(), &[0, 1, 2]);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(bfs_order(&c4, TieBreak::LowestIndex).as_slice(), &[0, 1, 3, 2]);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(bfs_order(&e3, TieBreak::LowestIndex).as_slice(), &[0, 1, 2]);
        assert!(bfs_order(&Graph::empty(0).unwrap(), TieBreak::Seeded(1)).is_empty());
    }

    #[test]
    fn seeded_is_a_permutation_and_replayable() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let a = bfs_order(&c4, TieBreak::Seeded(9));
        assert_eq!(a, bfs_order(&c4, TieBreak::Seeded(9)));
        assert_eq!(a.len(), 4);
    }
}

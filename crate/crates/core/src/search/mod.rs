//! Sequential graph searches: BFS, two LexBFS implementations and maximum
//! cardinality search.
//!
//! Wherever the algorithms may pick "any" vertex, a [`TieBreak`] decides.
//! [`TieBreak::LowestIndex`] always prefers the smallest vertex id and makes
//! the output a pure function of the graph. [`TieBreak::Seeded`] runs the
//! same algorithm on a randomly relabeled copy of the graph and maps the
//! result back, which explores other valid outputs reproducibly.

mod bfs;
mod label;
mod lexbfs_labels;
mod lexbfs_partition;
mod mcs;

pub use bfs::bfs_order;
pub use label::LexLabel;
pub use lexbfs_labels::{lexbfs_labels, lexbfs_labels_audited};
pub use lexbfs_partition::lexbfs_partition;
pub use mcs::mcs_order;

use crate::graph::{Graph, VertexOrdering};
use crate::rng::{streams, SeededRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    #[default]
    LowestIndex,
    Seeded(u64),
}

impl TieBreak {
    /// `Seeded(seed)` when a seed is given, otherwise `LowestIndex`.
    pub fn from_seed(seed: Option<u64>) -> Self {
        seed.map_or(Self::LowestIndex, Self::Seeded)
    }
}

/// Which LexBFS implementation a pipeline uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexBfsVariant {
    /// Label lists, one doubly linked list per distinct label.
    Labels,
    /// Partition refinement over a doubly linked vertex sequence.
    Partition,
}

impl LexBfsVariant {
    pub fn run(self, g: &Graph, tie_break: TieBreak) -> VertexOrdering {
        match self {
            Self::Labels => lexbfs_labels(g, tie_break),
            Self::Partition => lexbfs_partition(g, tie_break),
        }
    }
}

/// Runs a lowest-index search under `tie_break`.
pub(crate) fn with_tie_break<F>(g: &Graph, tie_break: TieBreak, search: F) -> VertexOrdering
where
    F: FnOnce(&Graph) -> Vec<usize>,
{
    match tie_break {
        TieBreak::LowestIndex => ordering(search(g)),
        TieBreak::Seeded(seed) => {
            let new_id = SeededRng::new(seed, streams::TIE_BREAK).permutation(g.vertex_count());
            let mut old_id = vec![0; new_id.len()];
            for (old, &new) in new_id.iter().enumerate() {
                old_id[new] = old;
            }
            let order = search(&g.relabeled(&new_id));
            ordering(order.into_iter().map(|v| old_id[v]).collect())
        }
    }
}

fn ordering(order: Vec<usize>) -> VertexOrdering {
    VertexOrdering::new(order).expect("searches visit every vertex exactly once")
}

pub(crate) const NONE: usize = usize::MAX;

//! Perfect elimination ordering test and the sequential chordality pipeline.
//!
//! An ordering is a PEO when every left neighborhood `LN_v` induces a clique.
//! It suffices to check `LN_v - {p_v} ⊆ LN_{p_v}` for the parent `p_v`, the
//! right-most member of `LN_v`. The test groups vertices by parent: for each
//! `x` it marks `LN_x` in a scratch array, checks every child `y` with
//! `p_y = x` against the marks, and unmarks again. Every adjacency list is
//! scanned at most four times (parents, marking, unmarking, as a child).

use std::fmt;

use crate::error::Result;
use crate::graph::{Graph, VertexOrdering};
use crate::search::{LexBfsVariant, TieBreak};

/// Evidence that an ordering is not a PEO: `p` is the parent of `v`, `z` is
/// another left neighbor of `v`, and `z` and `p` are not adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WitnessTriple {
    pub v: usize,
    pub p: usize,
    pub z: usize,
}

impl WitnessTriple {
    /// Checks the triple directly against the adjacency matrix: `z` and `p`
    /// are neighbors of `v`, `z` is not a neighbor of `p`, and
    /// `pos(z) < pos(p) < pos(v)`.
    pub fn is_valid(&self, g: &Graph, ord: &VertexOrdering) -> bool {
        let n = g.vertex_count();
        let Self { v, p, z } = *self;
        if v >= n || p >= n || z >= n || ord.len() != n {
            return false;
        }
        g.is_adjacent(v, p)
            && g.is_adjacent(v, z)
            && !g.is_adjacent(z, p)
            && ord.position_of(z) < ord.position_of(p)
            && ord.position_of(p) < ord.position_of(v)
    }

    pub fn to_one_based(self) -> (usize, usize, usize) {
        (self.v + 1, self.p + 1, self.z + 1)
    }
}

impl fmt::Display for WitnessTriple {
    /// 1-based, as printed by the command line tool.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} p={} z={}", self.v + 1, self.p + 1, self.z + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeoCheck {
    Perfect,
    Violated(WitnessTriple),
}

impl PeoCheck {
    pub fn is_perfect(&self) -> bool {
        matches!(self, Self::Perfect)
    }

    pub fn witness(&self) -> Option<WitnessTriple> {
        match self {
            Self::Perfect => None,
            Self::Violated(w) => Some(*w),
        }
    }
}

/// Tests whether `ord` is a perfect elimination ordering of `g` in O(n + m).
///
/// On failure the witness is the first one met when parents `p` are visited
/// in ascending id, their children `v` in ascending id, and `z` in ascending
/// id.
pub fn is_peo(g: &Graph, ord: &VertexOrdering) -> Result<PeoCheck> {
    is_peo_counting(g, ord).map(|(check, _)| check)
}

/// [`is_peo`] that also reports how many adjacency list entries it read.
pub fn is_peo_counting(g: &Graph, ord: &VertexOrdering) -> Result<(PeoCheck, usize)> {
    ord.ensure_covers(g)?;
    let n = g.vertex_count();
    let pos = ord.positions();
    let mut scanned = 0usize;

    let mut parent = vec![usize::MAX; n];
    for x in 0..n {
        let nx = g.neighbor_slice(x);
        scanned += nx.len();
        let mut best = usize::MAX;
        for &y in nx {
            let y = y as usize;
            if pos[y] < pos[x] && (best == usize::MAX || pos[y] > pos[best]) {
                best = y;
            }
        }
        parent[x] = best;
    }

    // Children grouped by parent, ascending within each group.
    let mut start = vec![0usize; n + 1];
    for &p in &parent {
        if p != usize::MAX {
            start[p + 1] += 1;
        }
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut children = vec![0usize; start[n]];
    for (y, &p) in parent.iter().enumerate() {
        if p != usize::MAX {
            children[fill[p]] = y;
            fill[p] += 1;
        }
    }

    let mut marked = vec![false; n];
    for x in 0..n {
        let kids = &children[start[x]..start[x + 1]];
        if kids.is_empty() {
            continue;
        }
        let nx = g.neighbor_slice(x);
        scanned += nx.len();
        for &y in nx {
            if pos[y as usize] < pos[x] {
                marked[y as usize] = true;
            }
        }
        let mut witness = None;
        'children: for &y in kids {
            let ny = g.neighbor_slice(y);
            scanned += ny.len();
            for &z in ny {
                let z = z as usize;
                if z != x && pos[z] < pos[y] && !marked[z] {
                    witness = Some(WitnessTriple { v: y, p: x, z });
                    break 'children;
                }
            }
        }
        scanned += nx.len();
        for &y in nx {
            marked[y as usize] = false;
        }
        if let Some(w) = witness {
            return Ok((PeoCheck::Violated(w), scanned));
        }
    }
    Ok((PeoCheck::Perfect, scanned))
}

/// Outcome of a chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityVerdict {
    /// The LexBFS ordering that turned out to be a PEO.
    Chordal { peo: VertexOrdering },
    /// The LexBFS ordering that failed, with the witness against it.
    NotChordal {
        order: VertexOrdering,
        witness: WitnessTriple,
    },
}

impl ChordalityVerdict {
    pub fn from_check(order: VertexOrdering, check: PeoCheck) -> Self {
        match check {
            PeoCheck::Perfect => Self::Chordal { peo: order },
            PeoCheck::Violated(witness) => Self::NotChordal { order, witness },
        }
    }

    pub fn is_chordal(&self) -> bool {
        matches!(self, Self::Chordal { .. })
    }

    pub fn peo(&self) -> Option<&VertexOrdering> {
        match self {
            Self::Chordal { peo } => Some(peo),
            Self::NotChordal { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<WitnessTriple> {
        match self {
            Self::Chordal { .. } => None,
            Self::NotChordal { witness, .. } => Some(*witness),
        }
    }

    /// The searched ordering, PEO or not.
    pub fn order(&self) -> &VertexOrdering {
        match self {
            Self::Chordal { peo } => peo,
            Self::NotChordal { order, .. } => order,
        }
    }
}

/// Sequential pipeline: LexBFS, then the PEO test on its output.
pub fn is_chordal(g: &Graph, variant: LexBfsVariant, tie_break: TieBreak) -> ChordalityVerdict {
    let order = variant.run(g, tie_break);
    let check = is_peo(g, &order).expect("a search ordering covers the graph");
    ChordalityVerdict::from_check(order, check)
}

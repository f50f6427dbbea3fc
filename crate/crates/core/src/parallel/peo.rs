//! Parallel PEO test in two barrier phases.
//!
//! Phase 1: task `x` builds its left neighborhood as a bit row by scanning
//! its adjacency row, and its parent `p_x`. Phase 2: task `x` computes
//! `(LN_x - {p_x}) \ LN_{p_x}` word by word; a nonempty result clears the
//! shared flag. The parent itself must be excluded: it belongs to `LN_x`
//! but never to its own left neighborhood.
//!
//! All failing tasks write `false`, so the flag does not depend on
//! arbitration. Each also offers a witness triple; arbitration picks one.

use super::engine::{run_phase_program, PhaseProgram, WriteSet};
use super::ParallelConfig;
use crate::bits::{BitMatrix, Ones};
use crate::error::Result;
use crate::graph::{Graph, VertexOrdering};
use crate::peo::{PeoCheck, WitnessTriple};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeoCell {
    LeftRow(u32),
    Parent(u32),
    Flag,
    Witness,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PeoValue {
    Row(Box<[u64]>),
    Vertex(u32),
    Flag(bool),
    Witness(WitnessTriple),
}

pub struct PeoState {
    left: BitMatrix,
    parent: Vec<u32>,
    flag: bool,
    witness: Option<WitnessTriple>,
}

struct PeoProgram<'a> {
    adjacency: &'a BitMatrix,
    position: &'a [usize],
}

impl PhaseProgram for PeoProgram<'_> {
    type State = PeoState;
    type Local = Vec<u64>;
    type Cell = PeoCell;
    type Value = PeoValue;

    fn phase_count(&self) -> usize {
        2
    }

    fn task_count(&self) -> usize {
        self.position.len()
    }

    fn init_local(&self) -> Vec<u64> {
        vec![0; self.adjacency.words_per_row()]
    }

    fn run_task(
        &self,
        phase: usize,
        x: usize,
        st: &PeoState,
        row: &mut Vec<u64>,
        out: &mut WriteSet<PeoCell, PeoValue>,
    ) {
        let pos = self.position;
        if phase == 0 {
            row.fill(0);
            let mut parent = NONE;
            for y in Ones::new(self.adjacency.row(x)) {
                if pos[y] < pos[x] {
                    row[y / 64] |= 1 << (y % 64);
                    if parent == NONE || pos[y] > pos[parent as usize] {
                        parent = y as u32;
                    }
                }
            }
            if parent != NONE {
                out.write_private(PeoCell::LeftRow(x as u32), PeoValue::Row(row.as_slice().into()));
                out.write_private(PeoCell::Parent(x as u32), PeoValue::Vertex(parent));
            }
            return;
        }
        let p = st.parent[x];
        if p == NONE {
            return;
        }
        let p = p as usize;
        let own = st.left.row(x);
        let parents = st.left.row(p);
        for (i, (&a, &b)) in own.iter().zip(parents).enumerate() {
            let mut outside = a & !b;
            if i == p / 64 {
                outside &= !(1 << (p % 64));
            }
            if outside != 0 {
                let z = i * 64 + outside.trailing_zeros() as usize;
                out.write(PeoCell::Flag, PeoValue::Flag(false));
                out.write(PeoCell::Witness, PeoValue::Witness(WitnessTriple { v: x, p, z }));
                return;
            }
        }
    }

    fn apply(&self, st: &mut PeoState, cell: PeoCell, value: PeoValue) {
        match (cell, value) {
            (PeoCell::LeftRow(x), PeoValue::Row(words)) => st.left.row_mut(x as usize).copy_from_slice(&words),
            (PeoCell::Parent(x), PeoValue::Vertex(p)) => st.parent[x as usize] = p,
            (PeoCell::Flag, PeoValue::Flag(f)) => st.flag = f,
            (PeoCell::Witness, PeoValue::Witness(w)) => st.witness = Some(w),
            (cell, value) => unreachable!("value {value:?} does not fit cell {cell:?}"),
        }
    }
}

/// Parallel PEO test against an explicit adjacency matrix.
pub(crate) fn peo_test_with_matrix(
    adjacency: &BitMatrix,
    ord: &VertexOrdering,
    config: &ParallelConfig,
) -> Result<PeoCheck> {
    let n = ord.len();
    let program = PeoProgram {
        adjacency,
        position: ord.positions(),
    };
    let state = PeoState {
        left: BitMatrix::new(n, n),
        parent: vec![NONE; n],
        flag: true,
        witness: None,
    };
    let state = run_phase_program(&program, state, &config.engine())?;
    Ok(match (state.flag, state.witness) {
        (true, _) => PeoCheck::Perfect,
        (false, Some(w)) => PeoCheck::Violated(w),
        (false, None) => unreachable!("the flag is only cleared together with a witness"),
    })
}

/// Parallel PEO test. The verdict equals [`crate::peo::is_peo`]'s for every
/// arbitration; the witness may differ.
pub fn parallel_peo_test(g: &Graph, ord: &VertexOrdering, config: &ParallelConfig) -> Result<PeoCheck> {
    ord.ensure_covers(g)?;
    peo_test_with_matrix(g.adjacency_matrix(), ord, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallel::Arbitration;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn ord(one_based: &[usize]) -> VertexOrdering {
        VertexOrdering::new(one_based.iter().map(|v| v - 1).collect()).unwrap()
    }

    #[test]
    fn examples() {
        let config = ParallelConfig::default();
        let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert!(parallel_peo_test(&k4, &ord(&[1, 2, 3, 4]), &config)
            .unwrap()
            .is_perfect());
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let check = parallel_peo_test(&c4, &ord(&[1, 2, 4, 3]), &config).unwrap();
        assert_eq!(check.witness().unwrap().to_one_based(), (3, 4, 2));
        let star = g(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]);
        assert!(parallel_peo_test(&star, &ord(&[1, 2, 3, 4, 5]), &config)
            .unwrap()
            .is_perfect());
        assert!(parallel_peo_test(&star, &ord(&[1, 2]), &config).is_err());
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        // Path 0-70-1 ordered 0, 1, 70: LN_70 = {0, 1}, parent 1, and 0 is not
        // adjacent to 1.
        let mut edges = vec![(0, 70), (70, 1)];
        edges.extend((2..69).map(|v| (v, v + 1)));
        let graph = Graph::from_edges(71, edges).unwrap();
        let mut order: Vec<usize> = vec![0, 1, 70];
        order.extend(2..70);
        let o = VertexOrdering::new(order).unwrap();
        for seed in 0..3 {
            let check = parallel_peo_test(&graph, &o, &ParallelConfig::new(Arbitration::Seeded(seed))).unwrap();
            let w = check.witness().unwrap();
            assert!(w.is_valid(&graph, &o));
        }
    }
}

//! Barrier-phase parallel chordality test.
//!
//! Both steps of the pipeline run on the [`engine`]: LexBFS as four phases
//! per numbered vertex ([`lexbfs`]) and the PEO test as two phases
//! ([`peo`]). Races between tasks are resolved by an [`Arbitration`], which
//! makes every run replayable.

mod arbitration;
pub mod engine;
pub mod lexbfs;
pub mod peo;

pub use arbitration::{Arbitration, Priority};
pub use engine::{default_workers, run_phase_program, EngineConfig, EngineError, PhaseProgram, PhaseReport, WriteSet};
pub use lexbfs::{parallel_lexbfs, parallel_lexbfs_run, AuditSummary, LexBfsRun, SetList};
pub use peo::parallel_peo_test;

use crate::error::Result;
use crate::graph::Graph;
use crate::peo::ChordalityVerdict;

/// Default cap on `next` table entries before falling back to a hash map.
pub const DEFAULT_FLAT_TABLE_LIMIT: usize = 1 << 27;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelConfig {
    pub arbitration: Arbitration,
    /// Worker threads; `None` reads `CHORDAL_WORKERS` or uses every core.
    pub workers: Option<usize>,
    /// Check the set list invariants after every phase (slow; for tests).
    pub audit: bool,
    /// Keep set counters in a working copy of the adjacency matrix instead
    /// of a separate table; the copy is restored before the PEO test.
    pub reuse_adjacency: bool,
    /// Largest `next` table kept as a flat array.
    pub flat_table_limit: usize,
}

impl ParallelConfig {
    pub fn new(arbitration: Arbitration) -> Self {
        Self {
            arbitration,
            workers: None,
            audit: false,
            reuse_adjacency: false,
            flat_table_limit: DEFAULT_FLAT_TABLE_LIMIT,
        }
    }

    pub fn engine(&self) -> EngineConfig {
        EngineConfig {
            arbitration: self.arbitration,
            workers: self.workers.unwrap_or_else(default_workers),
            audit: self.audit,
        }
    }
}

impl Default for ParallelConfig {
    fn default() -> Self {
        Self::new(Arbitration::default())
    }
}

impl From<Arbitration> for ParallelConfig {
    fn from(arbitration: Arbitration) -> Self {
        Self::new(arbitration)
    }
}

/// Parallel pipeline: parallel LexBFS, then the parallel PEO test.
pub fn parallel_is_chordal(g: &Graph, config: &ParallelConfig) -> Result<ChordalityVerdict> {
    let run = parallel_lexbfs_run(g, config)?;
    let check = match run.clobbered_adjacency {
        Some(mut adjacency) => {
            adjacency.copy_from(g.adjacency_matrix());
            peo::peo_test_with_matrix(&adjacency, &run.order, config)?
        }
        None => parallel_peo_test(g, &run.order, config)?,
    };
    Ok(ChordalityVerdict::from_check(run.order, check))
}

use std::hash::{Hash, Hasher};

use rustc_hash::FxHasher;

use crate::rng::mix64;

/// How concurrent writes to one cell within a phase are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arbitration {
    /// Winner chosen by a hash of `(seed, phase, cell, writer)`: looks random,
    /// replays exactly.
    Seeded(u64),
    /// Winner chosen by writer id.
    FixedPriority(Priority),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Priority {
    /// The lowest writer id wins.
    Ascending,
    /// The highest writer id wins.
    Descending,
}

impl Arbitration {
    /// `Seeded(seed)` when a seed is given, otherwise lowest writer wins.
    pub fn from_seed(seed: Option<u64>) -> Self {
        seed.map_or(Self::FixedPriority(Priority::Ascending), Self::Seeded)
    }
}

impl Default for Arbitration {
    fn default() -> Self {
        Self::FixedPriority(Priority::Ascending)
    }
}

/// Arbitration bound to one phase. Larger priority wins; equal priorities
/// fall back to the lower writer.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Arbiter {
    arbitration: Arbitration,
    phase: u64,
}

impl Arbiter {
    pub(crate) fn new(arbitration: Arbitration, phase: usize) -> Self {
        Self {
            arbitration,
            phase: phase as u64,
        }
    }

    #[inline]
    pub(crate) fn priority<C: Hash>(&self, cell: &C, writer: usize) -> u64 {
        match self.arbitration {
            Arbitration::Seeded(seed) => {
                let mut h = FxHasher::default();
                cell.hash(&mut h);
                mix64(seed ^ mix64(self.phase ^ mix64(h.finish() ^ mix64(writer as u64))))
            }
            Arbitration::FixedPriority(Priority::Ascending) => u64::MAX - writer as u64,
            Arbitration::FixedPriority(Priority::Descending) => writer as u64,
        }
    }
}

#[inline]
pub(crate) fn beats(priority: u64, writer: usize, other_priority: u64, other_writer: usize) -> bool {
    priority > other_priority || (priority == other_priority && writer < other_writer)
}

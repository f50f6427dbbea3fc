//! Chordal graph recognition.
//!
//! The pipeline computes a LexBFS ordering and tests whether it is a perfect
//! elimination ordering (PEO); a graph is chordal exactly when it is.
//! Two sequential LexBFS variants, BFS and maximum cardinality search are in
//! [`search`], the PEO test in [`peo`], and a barrier-phase parallel version
//! of both steps in [`parallel`]. [`oracle`] holds brute-force checkers used
//! as ground truth by the tests, and [`generators`] builds seeded benchmark
//! graphs.
//!
//! All vertex ids in this crate are 0-based. The text formats in [`io`] use
//! 1-based ids.

pub mod bits;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod parallel;
pub mod peo;
pub mod rng;
pub mod search;

pub use error::{Error, InvariantViolation, ParseErrorKind, Result};
pub use graph::{left_neighborhoods, Graph, GraphBuilder, LeftNeighborhood, VertexOrdering};
pub use parallel::{parallel_is_chordal, parallel_lexbfs, parallel_peo_test, Arbitration, ParallelConfig, Priority};
pub use peo::{is_chordal, is_peo, ChordalityVerdict, PeoCheck, WitnessTriple};
pub use search::{bfs_order, lexbfs_labels, lexbfs_partition, mcs_order, LexBfsVariant, LexLabel, TieBreak};

use std::fmt;

use thiserror::Error;

/// Errors raised by graph construction, parsing, orderings and generators.
///
/// Vertex numbers carried by [`Error::InvalidVertex`] and [`Error::SelfLoop`]
/// are reported exactly as the caller supplied them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    GraphTooLarge { n: usize, limit: usize },
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("edge probability {0} is outside (0, 1]")]
    InvalidProbability(f64),
    #[error(transparent)]
    Engine(#[from] crate::parallel::EngineError),
}

/// What went wrong on a particular line of a graph or ordering file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader(String),
    MalformedEdge(String),
    UnexpectedLine(String),
    InvalidVertex { vertex: usize, n: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    EdgeCountMismatch { expected: usize, found: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingHeader => write!(f, "missing `p <n> <m>` header"),
            Self::MalformedHeader(line) => write!(f, "malformed header `{line}`"),
            Self::MalformedEdge(line) => write!(f, "malformed edge line `{line}`"),
            Self::UnexpectedLine(line) => write!(f, "unexpected line `{line}`"),
            Self::InvalidVertex { vertex, n } => {
                write!(f, "vertex {vertex} is out of range 1..={n}")
            }
            Self::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Self::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            Self::EdgeCountMismatch { expected, found } => {
                write!(f, "header announces {expected} edges but {found} were given")
            }
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A checked invariant of an algorithm failed. Raised only by audited runs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant violated: {0}")]
pub struct InvariantViolation(pub String);

use std::fmt;
use std::path::PathBuf;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid swap {remove:?} -> {insert:?}: {reason}")]
    InvalidSwap {
        remove: Edge,
        insert: Edge,
        reason: &'static str,
    },
    #[error("invalid edge {0:?}: {1}")]
    InvalidEdge(Edge, &'static str),
    #[error("graph is complete, no non-edge exists")]
    CompleteGraph,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("{n} nodes cannot fill {layers} non-empty layers")]
    TooFewNodes { n: usize, layers: usize },
    #[error("{m} edges requested but only {available} are available")]
    InfeasibleEdgeCount { m: usize, available: usize },
    #[error("seed graph violates constraints: {}", join(.0))]
    SeedViolation(Vec<Violation>),
    #[error("spectra have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ensemble diversity needs at least two graphs, got {0}")]
    TooFewGraphs(usize),
    #[error("eigensolver did not converge on a {0}x{0} matrix")]
    ConvergenceFailure(usize),
    #[error("no valid seed graph found after {0} ant-colony instances")]
    NoSeedFound(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// A single failed check against a [`crate::Constraints`] set.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NodeCount { expected: usize, found: usize },
    EdgeCount { expected: usize, found: usize },
    ClusteringOutOfBounds { cc: f64, min: f64, max: f64 },
    DiameterOutOfBounds { diameter: usize, min: usize, max: usize },
    Disconnected,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NodeCount { expected, found } => {
                write!(f, "node count {found} != {expected}")
            }
            Violation::EdgeCount { expected, found } => {
                write!(f, "edge count {found} != {expected}")
            }
            Violation::ClusteringOutOfBounds { cc, min, max } => {
                write!(f, "clustering {cc} outside [{min}, {max}]")
            }
            Violation::DiameterOutOfBounds { diameter, min, max } => {
                write!(f, "diameter {diameter} outside [{min}, {max}]")
            }
            Violation::Disconnected => write!(f, "graph is disconnected"),
        }
    }
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

use std::fmt;

use crate::geometry::Point;
use crate::graph::Edge;

/// A general-position violation, naming the offending vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    Collinear([usize; 3]),
    Cocircular([usize; 4]),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Collinear([a, b, c]) => write!(f, "vertices {a}, {b}, {c} are collinear"),
            Violation::Cocircular([a, b, c, d]) => {
                write!(f, "vertices {a}, {b}, {c}, {d} are cocircular")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("coordinate magnitude exceeds the supported range at vertex {0}")]
    CoordinateRange(usize),
    #[error("general position violated: {0}")]
    GeneralPosition(Violation),
    #[error("edges {0} and {1} intersect")]
    NonPlanar(Edge, Edge),
    #[error("degenerate triangle {0} {1} {2}")]
    DegenerateTriangle(Point, Point, Point),
    #[error("input graph is not a forest")]
    NotAForest,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("beta must be a rational in [1, 2], got {0}")]
    BetaOutOfRange(String),
    #[error("edge {0} is not in the triangulation")]
    MissingEdge(Edge),
    #[error("oracle limit exceeded: {edges} input edges, at most {limit} supported")]
    OracleLimit { edges: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for geometric input violations (as opposed to syntax or structure).
    pub fn is_geometric(&self) -> bool {
        matches!(self, Error::GeneralPosition(_) | Error::NonPlanar(..) | Error::DegenerateTriangle(..))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

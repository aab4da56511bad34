use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree must be at least 1, got ({0}, {1})")]
    InvalidDegree(usize, usize),
    #[error("weight table has no entry for degree pair ({0}, {1})")]
    MissingTableEntry(usize, usize),
    #[error("weight value {value} at degree pair ({x}, {y}) is not positive")]
    NonPositiveValue { x: usize, y: usize, value: f64 },
    #[error("invalid weight spec `{spec}`: {reason}")]
    BadWeightSpec { spec: String, reason: String },
    #[error("invalid graph: {0}")]
    BadGraph(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no cycle")]
    NoCycle,
    #[error("order {n} exceeds the supported limit of {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotFound(usize, usize),
    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("incidence weights have no value at vertex {vertex} of edge ({}, {})", .edge.0, .edge.1)]
    IncompleteIncidence { vertex: usize, edge: (usize, usize) },
    #[error("bad split for a path of length {l}: {l1} + {l2} != {}", 2 * .l)]
    BadSplit { l: usize, l1: i64, l2: i64 },
    #[error("path of length 1 needs the modified edge weight to carry a certificate")]
    UnmodifiedSingleEdge,
    #[error("alpha' = {0} lies outside (0, 1/4]")]
    AlphaOutOfRange(f64),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("invalid family spec `{spec}`: {reason}")]
    BadFamilySpec { spec: String, reason: String },
}

impl Error {
    /// True for errors caused by malformed user input rather than by a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidDegree(..)
                | Error::BadWeightSpec { .. }
                | Error::BadGraph(_)
                | Error::SizeLimit { .. }
                | Error::EdgeNotFound(..)
                | Error::BadSplit { .. }
                | Error::BadParams(_)
                | Error::BadFamilySpec { .. }
                | Error::MissingTableEntry(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

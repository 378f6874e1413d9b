use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    #[error("matrix is singular: pivot {pivot:e} at column {column} is below tolerance {tolerance:e}")]
    SingularMatrix {
        column: usize,
        pivot: f64,
        tolerance: f64,
    },

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("node set needs at least 2 points, got {0}")]
    TooFewNodes(usize),

    #[error("nodes {0} and {1} coincide within the distinctness threshold")]
    CoincidentNodes(usize, usize),

    #[error("node {node} is too close to pole {pole}")]
    NodeTooCloseToPole { node: usize, pole: usize },

    #[error("poles {0} and {1} coincide")]
    CoincidentPoles(usize, usize),

    #[error("trigonometric interpolation needs an odd node count, got {0}")]
    EvenNodeCount(usize),

    #[error("nodes {0} and {1} are congruent modulo 2π")]
    NodesCongruentMod2Pi(usize, usize),

    #[error("{basis} matrices do not support {what}")]
    UnsupportedBasis {
        basis: &'static str,
        what: &'static str,
    },

    #[error("argument {0} lies on or next to a pole")]
    PoleProximity(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("series did not converge after {0} terms")]
    SeriesNotConverged(usize),

    #[error("operator is singular; smallest eigenvalue is ≈ 0 (pivot {pivot:e})")]
    SingularOperator { pivot: f64 },

    #[error("eigen iteration did not converge after {iterations} iterations (last change {last_change:e})")]
    NoConvergence { iterations: usize, last_change: f64 },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Whether the failure is numerical (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularMatrix { .. }
                | Error::NonFinite(_)
                | Error::SeriesNotConverged(_)
                | Error::SingularOperator { .. }
                | Error::NoConvergence { .. }
        )
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        if self.is_numerical() {
            3
        } else {
            2
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

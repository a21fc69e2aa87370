use thiserror::Error;

/// Errors produced anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The model data is malformed (unknown label, bad tensor shape), as opposed
    /// to well-formed data that violates a physical axiom.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("incomplete model: missing {0}")]
    IncompleteModel(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("consistency failure at ({a}, {b}, {c}): deviation {deviation:e}")]
    ConsistencyFailure {
        a: String,
        b: String,
        c: String,
        deviation: f64,
    },

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    #[error("condensation rejected for pair ({a}, {b}): {reason}")]
    CondensationRejected { a: String, b: String, reason: String },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid stabilizer set: {0}")]
    InvalidStabilizerSet(String),

    #[error("frustrated projector: every trial state was annihilated")]
    FrustratedProjector,

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("unknown path {path:?}; valid paths: {valid}")]
    UnknownPath { path: String, valid: String },

    #[error("cell {0:?} does not define fusion operators A1 and A2")]
    MissingFusionOps(String),

    #[error("no cell supplied for pair ({0}, {1})")]
    MissingCell(String, String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the I-graph computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order n = {0}: an I-graph needs n >= 3")]
    OrderTooSmall(i64),

    #[error("non-simple graph: step {step} reduces to {reduced} modulo n = {n}")]
    NonSimpleStep { n: usize, step: i64, reduced: usize },

    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("circulant row must have at least one entry")]
    EmptyRow,

    #[error("eigenvalue of circulant row has imaginary part {0:e}; row is not symmetric")]
    NonRealEigenvalue(f64),

    #[error("nullity certificate requires k = 2j, got j = {j}, k = {k}")]
    NotDoubledStep { j: usize, k: usize },

    #[error("pairing requires n even and j, k odd; got I({n},{j},{k})")]
    PairingUndefined { n: usize, j: usize, k: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("malformed adjacency matrix: {0}")]
    MalformedMatrix(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

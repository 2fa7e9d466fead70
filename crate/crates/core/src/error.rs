use thiserror::Error;

use crate::arith::Rat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("not a series in u^-1: numerator degree {num_deg} exceeds denominator degree {den_deg}")]
    NotASeries { num_deg: usize, den_deg: usize },

    #[error("inconsistent samples: no rational function of degrees ({num_deg}, {den_deg}) fits at u = {point}")]
    InconsistentSamples {
        point: Rat,
        num_deg: usize,
        den_deg: usize,
    },

    #[error("need at least {needed} samples at distinct points, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("evaluation point u = {0} is a pole")]
    Pole(Rat),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("mismatched modules: {0}")]
    Mismatch(String),

    #[error("vector is not an eigenvector of t_{index}{index}(u): coordinate {coordinate} disagrees at u = {point}")]
    NotEigenvector {
        index: usize,
        coordinate: usize,
        point: Rat,
    },

    #[error("subspace is not invariant under t_{i},{j}(u)")]
    NotInvariant { i: usize, j: usize },

    #[error("expected a unique highest vector, found a {0}-dimensional space")]
    NonUniqueHighestVector(usize),

    #[error("degree bound violated while interpolating operator entries")]
    DegreeBound,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

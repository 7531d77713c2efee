use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no value supplied for generator p{0}")]
    MissingGenerator(u32),

    #[error("coefficient of z^-{requested} requested but series is only known through z^-{order}")]
    InsufficientTruncation { requested: i64, order: i64 },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: i64, right: i64 },

    #[error("exponential needs a series starting at z^-1 or later, got leading exponent {0}")]
    DivergentExponential(i64),

    #[error("leading coefficient is not invertible")]
    NotInvertible,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),

    #[error("phi data holds {available} log coefficients but {needed} are required")]
    InsufficientPhiData { needed: usize, available: usize },

    #[error("basis has no generator with subscript {0}")]
    MissingBasisGenerator(u32),

    #[error("linear system is rank deficient (rank {rank} of {columns})")]
    RankDeficient { rank: usize, columns: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("size mismatch: |lambda| = {lambda}, |nu| = {nu}")]
    SizeMismatch { lambda: u32, nu: u32 },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

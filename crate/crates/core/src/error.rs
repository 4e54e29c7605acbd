use thiserror::Error;

/// Errors surfaced by the exact-arithmetic toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("partitions have different sizes ({0} vs {1})")]
    SizeMismatch(u32, u32),

    #[error("malformed partition `{input}`: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("`{0}` is not a partition of {1}")]
    NotPartitionOf(String, u32),

    #[error("invalid part set: {0}")]
    InvalidPartSet(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("incompatible matrix shapes: {0}")]
    ShapeMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("invalid row/column selection: {0}")]
    InvalidSelection(String),

    #[error("A^t*A is not the expected diagonal matrix")]
    NotOrthogonal,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("n = {n} exceeds the built-in table limit {max}")]
    Capacity { n: u32, max: u32 },

    #[error("k-table parse error: {0}")]
    KTableParse(String),

    #[error("k-table labels do not match the canonical k-bounded list: {0}")]
    KTableLabels(String),

    #[error("k-table is not square: {0}")]
    KTableNotSquare(String),

    #[error("k-table size does not match (n, k): {0}")]
    KTableSize(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

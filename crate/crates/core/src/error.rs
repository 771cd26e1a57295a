use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by partition construction, the counting engines and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),

    #[error("a partition needs at least one part")]
    EmptyPartition,

    #[error("size mismatch: expected partitions of {expected}, got one of {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected} variables, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("hook ({a}|{b}) does not have size {n}")]
    HookSize { a: usize, b: usize, n: usize },

    #[error("at least one factor is required")]
    NoFactors,

    #[error("the genus-0 formula does not apply: {0}")]
    NotGenusZero(String),

    #[error("oracle budget exceeded: {required} enumerated tuples > budget {budget}")]
    BudgetExceeded { required: BigInt, budget: u64 },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

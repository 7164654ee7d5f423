use num_bigint::BigUint;
use thiserror::Error;

/// Errors reported by the counting and network operations.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A matrix is not a valid network (not square, rows with differing
    /// sums, or an unexpected degree).
    #[error("malformed network: {0}")]
    MalformedNetwork(String),

    /// The network is too large for the exhaustive permutation search.
    #[error("network has {cells} cells, exceeding the supported limit of {limit}")]
    UnsupportedSize { cells: usize, limit: usize },

    /// An exhaustive enumeration would visit more matrices than allowed.
    #[error("enumeration of {size} matrices ({cells} cells, degree {degree}) exceeds the budget of {budget}")]
    BudgetExceeded {
        cells: usize,
        degree: u64,
        size: BigUint,
        budget: u64,
    },

    /// Two truncated series of different order were combined.
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Two networks with different cell counts were given to an operation
    /// that requires equal sizes.
    #[error("cell count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A network document could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An identity the algorithms rely on failed; this signals a bug, not
    /// bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

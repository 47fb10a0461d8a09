use thiserror::Error;

/// Errors raised by the counting engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A grid must have at least one row and one column.
    #[error("invalid grid shape {rows}x{cols}: both dimensions must be at least 1")]
    InvalidShape { rows: usize, cols: usize },

    /// Two operands disagree on variables, truncation orders or lengths.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A coefficient index beyond the truncation orders.
    #[error("exponents {exponents:?} exceed truncation orders {orders:?}")]
    Range {
        exponents: Vec<usize>,
        orders: Vec<usize>,
    },

    /// The exhaustive oracle refuses inputs above its enumeration cap.
    #[error("{cells} cells exceeds the enumeration cap of {cap}")]
    Capacity { cells: usize, cap: usize },

    /// A quantity that must be an exact integer (or a valid count) is not.
    #[error("internal consistency violated: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

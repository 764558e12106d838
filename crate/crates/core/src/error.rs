use thiserror::Error;

/// Errors produced by the polyhull library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0} (supported: 1..=4)")]
    UnsupportedDimension(usize),

    #[error("polyomino must contain at least one cell")]
    Empty,

    #[error("duplicate cell {0}")]
    DuplicateCell(String),

    #[error("cells are not facet-connected")]
    Disconnected,

    #[error("invalid build order: {0}")]
    InvalidOrder(String),

    #[error("resource limit exceeded: {what} = {value} exceeds guard {limit}")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("area n + m/2 with n = {n}, m = {m} is not attainable")]
    Unachievable { n: u32, m: u64 },

    #[error("coordinate overflow")]
    Overflow,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("postcondition violated: {0}")]
    Postcondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

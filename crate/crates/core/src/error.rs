use thiserror::Error;

/// Errors raised by the library. Every variant renders as a single line so
/// the CLI can forward it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("capacity exceeded: {what} is {got}, limit {limit}")]
    Capacity {
        what: &'static str,
        got: u64,
        limit: u64,
    },

    #[error("uniformity error: expected {expected}-subsets, found a subset of size {found}")]
    Uniformity { expected: usize, found: usize },

    #[error("mismatched uniformity: {left} vs {right}")]
    MismatchedUniformity { left: usize, right: usize },

    #[error("graph is disconnected; use the component product rule instead")]
    Disconnected,

    #[error("search budget of {budget} node expansions exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Graph6 { .. } => "graph6",
            Error::Capacity { .. } => "capacity",
            Error::Uniformity { .. } => "uniformity",
            Error::MismatchedUniformity { .. } => "mismatched-uniformity",
            Error::Disconnected => "disconnected",
            Error::BudgetExceeded { .. } => "budget",
            Error::DivisionByZero { .. } => "division-by-zero",
            Error::Parameter(_) => "parameter",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn capacity(what: &'static str, got: impl TryInto<u64>, limit: u64) -> Self {
        Error::Capacity {
            what,
            got: got.try_into().unwrap_or(u64::MAX),
            limit,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error(
        "oracle budget exceeded: {points} points of order <= {s} exceed the budget of {budget}"
    )]
    BudgetExceeded { s: i64, points: String, budget: u64 },

    #[error("subset blowup: {rows} rows exceed the inclusion-exclusion limit of {limit}")]
    SubsetBlowup { rows: usize, limit: usize },

    #[error("verification mismatch: {0}")]
    VerificationMismatch(String),

    #[error("algorithm disagreement: {0}")]
    Disagreement(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::DimensionMismatch { .. } => 1,
            Error::VerificationMismatch(_) | Error::Disagreement(_) => 2,
            Error::BudgetExceeded { .. } | Error::SubsetBlowup { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

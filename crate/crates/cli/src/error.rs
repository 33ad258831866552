use thiserror::Error;

use subspace_codes::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("numerical precondition violated: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Numerical(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::DimensionOverflow { .. }
            | CoreError::SizeOverflow { .. }
            | CoreError::CapExceeded { .. }
            | CoreError::DegenerateEnsemble { .. }
            | CoreError::DuplicateCodewords(..)
            | CoreError::TooFewCodewords => CliError::Infeasible(msg),
            CoreError::RankDeficient { .. } | CoreError::PreconditionViolated(_) => CliError::Numerical(msg),
            _ => CliError::Config(msg),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

use thiserror::Error;

/// Failures of the command-line tools; each maps to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid: {0}")]
    Validation(String),
    #[error("limit exceeded: {0}")]
    Cap(String),
    #[error("not in the class: {0}")]
    Class(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Cap(_) => 4,
            CliError::Class(_) => 5,
            CliError::Io(_) | CliError::Other(_) => 1,
        }
    }
}

impl From<logtw_core::Error> for CliError {
    fn from(e: logtw_core::Error) -> CliError {
        use logtw_core::Error as E;
        match e {
            E::CapExceeded { .. } => CliError::Cap(e.to_string()),
            E::InvalidDecomposition(m) => CliError::Validation(m),
            E::InvalidParameter(_) => CliError::Parse(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

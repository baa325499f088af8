use thiserror::Error;

/// Failures surfaced to the user, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("line {line}: {message}")]
    Batch { line: usize, message: String },

    #[error(transparent)]
    Core(#[from] adp_core::Error),

    #[error("{0}")]
    Mismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for usage and parse errors, 2 for enumeration guards, 3 for
    /// `--diff` and verification mismatches.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(adp_core::Error::GuardExceeded { .. }) => 2,
            CliError::Mismatch(_) => 3,
            _ => 1,
        }
    }
}

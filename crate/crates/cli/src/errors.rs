//! Error-to-exit-code mapping. The contract is stable: 0 success, 2 flag
//! validation, 3 I/O, 4 numeric failure.

use mscale_core::Error as CoreError;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag combinations (exit 2).
    Usage(String),
    /// Unreadable or malformed input, unwritable output (exit 3).
    Io(String),
    /// A computation could not produce a number (exit 4).
    Numeric(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Numeric(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NonFiniteSample { .. } | CoreError::EmptySignal => {
                CliError::Io(e.to_string())
            }
            CoreError::ZeroVariance | CoreError::NumericBlowup | CoreError::Degenerate => {
                CliError::Numeric(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

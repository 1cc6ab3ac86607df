use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A falsified assertion or a failed product check. The report, when
    /// present, is still printed.
    #[error("{message}")]
    Violation { message: String, report: Option<String> },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Violation { .. } => 4,
        })
    }
}

impl From<tropreal::PolyError> for CliError {
    fn from(e: tropreal::PolyError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<tropreal::groebner::GroebnerError> for CliError {
    fn from(e: tropreal::groebner::GroebnerError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<tropreal::tropical::TropicalError> for CliError {
    fn from(e: tropreal::tropical::TropicalError) -> Self {
        match e {
            tropreal::tropical::TropicalError::ProductMismatch { .. } => CliError::Violation {
                message: e.to_string(),
                report: None,
            },
            e => CliError::Precondition(e.to_string()),
        }
    }
}

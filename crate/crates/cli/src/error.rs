use alia_core::AliaError;
use thiserror::Error;

/// Everything a command can fail with. [`CliError::exit_code`] maps it to
/// the process exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("SYNTAX({line}, {col}): {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("UNBOUND_PARAM({0})")]
    UnboundParam(String),
    #[error("INDEX_OUT_OF_RANGE: index {index} at line {line}, column {col} is outside 1..{dim}")]
    IndexOutOfRange {
        line: usize,
        col: usize,
        index: String,
        dim: usize,
    },
    #[error("UNKNOWN_PARAM({0}): no input declares this parameter")]
    UnknownParam(String),
    #[error("MISSING_INPUT: {0}")]
    Missing(String),
    #[error("CONFLICT: {0}")]
    Conflict(String),
    #[error("IO: {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("USAGE: {0}")]
    Usage(String),
    #[error("{code}: {0}", code = .0.code())]
    Core(AliaError),
    #[error("HYPOTHESIS_FAILED: {law}")]
    Hypothesis { law: String },
}

impl CliError {
    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        CliError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub fn hypothesis(law: impl Into<String>) -> Self {
        CliError::Hypothesis { law: law.into() }
    }

    /// 1 for a failed construction hypothesis, 2 for any input problem.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Hypothesis { .. } => 1,
            _ => 2,
        }
    }
}

impl From<AliaError> for CliError {
    fn from(e: AliaError) -> Self {
        CliError::Core(e)
    }
}

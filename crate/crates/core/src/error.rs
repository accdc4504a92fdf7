use thiserror::Error;

use crate::amenability::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input text did not match the declared format. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// A certificate handed to a converter failed its checker.
    #[error("precondition failed: {message}{}", render_violations(.violations))]
    Precondition {
        message: String,
        violations: Vec<Violation>,
    },

    /// An oracle was asked about an instance outside the range its closed form covers.
    #[error("outside closed-form domain: {0}")]
    Domain(String),

    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition {
            message: message.into(),
            violations: Vec::new(),
        }
    }

    pub(crate) fn failed_check(message: impl Into<String>, violations: Vec<Violation>) -> Self {
        Error::Precondition {
            message: message.into(),
            violations,
        }
    }
}

fn render_violations(violations: &[Violation]) -> String {
    violations.iter().map(|v| format!("\n  {v}")).collect()
}

use logfol_core::Error;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Stable machine-readable failure categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ErrorCode {
    Syntax,
    DegreeMismatch,
    NcViolation,
    NotLogarithmic,
    PositiveDimensional,
    InvalidInput,
    VerificationFailed,
    Internal,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Syntax => "SYNTAX",
            ErrorCode::DegreeMismatch => "DEGREE_MISMATCH",
            ErrorCode::NcViolation => "NC_VIOLATION",
            ErrorCode::NotLogarithmic => "NOT_LOGARITHMIC",
            ErrorCode::PositiveDimensional => "POSITIVE_DIMENSIONAL",
            ErrorCode::InvalidInput => "INVALID_INPUT",
            ErrorCode::VerificationFailed => "VERIFICATION_FAILED",
            ErrorCode::Internal => "INTERNAL",
        }
    }

    /// Process exit status for this failure.
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCode::VerificationFailed => 1,
            ErrorCode::Internal => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("{code}{}: {message}", locus.as_ref().map(|l| format!(" at {l}")).unwrap_or_default())]
pub struct CliError {
    pub code: ErrorCode,
    /// Field path or `line:column` of the offending input, when known.
    pub locus: Option<String>,
    pub message: String,
}

impl CliError {
    pub fn new(code: ErrorCode, locus: Option<String>, message: impl Into<String>) -> Self {
        CliError { code, locus, message: message.into() }
    }

    /// Classifies a core error, attaching `locus` when given.
    pub fn from_core(err: Error, locus: Option<String>) -> Self {
        let code = match &err {
            Error::Parse { .. } | Error::RingMismatch { .. } => ErrorCode::Syntax,
            Error::DegreeMismatch { .. } => ErrorCode::DegreeMismatch,
            Error::NormalCrossing { .. } => ErrorCode::NcViolation,
            Error::NotLogarithmic { .. } => ErrorCode::NotLogarithmic,
            Error::PositiveDimensional { .. } => ErrorCode::PositiveDimensional,
            Error::Domain(_) => ErrorCode::InvalidInput,
            _ => ErrorCode::Internal,
        };
        CliError::new(code, locus, err.to_string())
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::from_core(err, None)
    }
}

use std::fmt;

use thiserror::Error;

/// Default ceiling on the number of objects an enumeration may materialize.
pub const DEFAULT_RESOURCE_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// An enumeration or expansion would exceed its configured cap.
    #[error("resource limit: {what} needs {needed} items, cap is {cap}")]
    ResourceLimit { what: String, needed: String, cap: u64 },

    /// An arithmetic identity that must always hold did not. Indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, needed: impl fmt::Display, cap: u64) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            needed: needed.to_string(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Syntax error in a group expression. `offset` is a byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at byte {offset}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
    pub hint: Option<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!("; expected one of: {}", expected.join(", "))
    }
}

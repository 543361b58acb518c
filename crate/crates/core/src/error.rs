use thiserror::Error;

use crate::lang::LangError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Lang(#[from] LangError),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// A structural invariant of the structure does not hold.
    #[error("{invariant}: {detail}")]
    Invariant { invariant: &'static str, detail: String },
    #[error("word `{0}` is not in the language of representatives")]
    NotRepresentative(String),
    #[error("product of `{0}` and `{1}` has no representative in the table")]
    MissingProduct(String, String),
    #[error("words must be nonempty")]
    EmptyWord,
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid multiplication table: {0}")]
    Table(String),
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant { invariant, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

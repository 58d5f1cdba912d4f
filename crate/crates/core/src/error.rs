use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` covers bad input. `TheoremViolation` means a computed value
/// contradicts a proven identity, which can only be caused by a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("search for p={p}, q={q} exhausted its cap of {cap} exponents")]
    SearchCapExhausted { p: u64, q: u64, cap: u64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::TheoremViolation(msg.into())
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

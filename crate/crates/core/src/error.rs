use thiserror::Error;

/// Errors raised by the set calculus, the homeomorphism constructions and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A description that does not denote a point, e.g. an empty repeating block.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A literal that could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An operation applied outside its domain (containment, disjointness, finiteness).
    #[error("domain error: {0}")]
    Domain(String),

    /// Two homeomorphisms whose shapes do not line up.
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: String, found: String },

    /// A filter witness that fails its side conditions.
    #[error("witness error: {0}")]
    Witness(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Constrained sampling gave up.
    #[error("generation error: {0}")]
    Generation(String),

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

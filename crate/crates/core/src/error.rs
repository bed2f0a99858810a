use thiserror::Error;

/// Errors raised by the engine and its front ends.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("ring or rank mismatch: {0}")]
    Mismatch(String),

    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// The quotient ring is zero, so depth is undefined.
    #[error("unit ideal")]
    UnitIdeal,

    /// An internal consistency check failed. This indicates a bug.
    #[error("engine assertion failed: {0}")]
    Engine(String),

    #[error("schema error at {pointer}: {msg}")]
    Schema { pointer: String, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    pub(crate) fn engine(msg: impl Into<String>) -> Self {
        Error::Engine(msg.into())
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }

    pub(crate) fn schema(pointer: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema {
            pointer: pointer.into(),
            msg: msg.into(),
        }
    }
}

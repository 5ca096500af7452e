use thiserror::Error;

/// Errors raised by word, path and polyomino operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A symbol outside the expected alphabet was found while parsing.
    #[error("invalid symbol {symbol:?} at position {position} (alphabet {alphabet})")]
    InvalidSymbol {
        symbol: char,
        position: usize,
        alphabet: &'static str,
    },

    /// The word does not describe the boundary of a polyomino.
    #[error("not a boundary word: {0}")]
    NotBoundary(String),

    /// Translation vectors do not span a lattice.
    #[error("degenerate lattice: {0}")]
    Degenerate(String),

    /// A tiling certificate was used before its coverage was verified.
    #[error("unverified certificate: {0}")]
    Unverified(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A square matrix has no inverse.
    #[error("matrix is singular")]
    Singular,
    /// An operation requires full row rank.
    #[error("matrix is rank deficient")]
    RankDeficient,
    /// Codeword enumeration is capped to keep memory and time bounded.
    #[error("codeword enumeration supports at most {max} generator rows, got {got}")]
    TooManyRows {
        /// Hard cap on generator rows.
        max: usize,
        /// Rows that were supplied.
        got: usize,
    },
    /// No built-in target profile for the requested kernel size.
    #[error("unsupported kernel size {got}; supported sizes: {supported}")]
    UnsupportedSize {
        /// Requested size.
        got: usize,
        /// Human-readable list of supported sizes.
        supported: String,
    },
    /// A distance profile entry is zero or undefined.
    #[error("degenerate distance profile: {0}")]
    DegenerateProfile(String),
    /// An environment action is not allowed in the current state.
    #[error("illegal action: {0}")]
    IllegalAction(String),
    /// An environment initialization request cannot be satisfied.
    #[error("invalid initialization: {0}")]
    InvalidInit(String),
    /// Malformed textual input (kernel file, config file, number list).
    #[error("parse error: {0}")]
    Parse(String),
    /// A configuration value is out of range or inconsistent.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    /// Not enough samples or trials to produce the requested estimate.
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

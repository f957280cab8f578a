use std::io;

use thiserror::Error;

/// Errors produced while building domain values, loading data or mining.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid gap constraint [{min},{max}]: minimum exceeds maximum")]
    InvalidGap { min: usize, max: usize },

    #[error("invalid symbol {0:?}")]
    InvalidSymbol(char),

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("malformed pattern {text:?}: {reason}")]
    MalformedPattern { text: String, reason: String },

    #[error("pattern gap [{found}] does not match the configured gap [{expected}]")]
    GapMismatch { expected: String, found: String },

    #[error("sequence {0} is empty")]
    EmptySequence(String),

    #[error("sequence database is empty")]
    EmptyDatabase,

    #[error("alphabet override is missing observed symbols {0:?}")]
    AlphabetOverride(Vec<char>),

    #[error("minimum support must be at least 1")]
    InvalidMinsup,

    #[error("oracle limit exceeded: {0}")]
    OracleLimit(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("value {value} at position {position} lies outside the binning range")]
    ValueOutOfRange { position: usize, value: f64 },

    #[error("invalid binning rule: {0}")]
    InvalidBinning(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

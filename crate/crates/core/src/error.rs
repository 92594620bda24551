use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Unsupported type, rank or other configuration problem.
    Config(String),
    /// Malformed argument to an operation.
    InvalidInput(String),
    /// A cap would be exceeded.
    Resource { what: String, predicted: u64, cap: u64 },
    /// The character table algorithm failed to produce an integral table.
    Algorithm(String),
    /// A subgroup element could not be located inside its parent.
    Embedding(String),
    /// A mathematical invariant that must hold was violated.
    Integrity(String),
    /// Curated data failed to parse or validate.
    Data(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(m) => write!(f, "configuration error: {m}"),
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::Resource { what, predicted, cap } => {
                write!(f, "{what}: predicted size {predicted} exceeds cap {cap}")
            }
            Error::Algorithm(m) => write!(f, "algorithm error: {m}"),
            Error::Embedding(m) => write!(f, "embedding error: {m}"),
            Error::Integrity(m) => write!(f, "integrity error: {m}"),
            Error::Data(m) => write!(f, "data error: {m}"),
        }
    }
}

impl core::error::Error for Error {}

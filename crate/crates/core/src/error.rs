use std::fmt;

/// Unified error type for the numeric, autodiff, and training layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes do not conform for the named operation.
    Shape {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    /// A scalar argument is outside its mathematical domain.
    Domain(String),
    /// The API was called in a way that has no meaning (cross-tape nodes,
    /// non-scalar loss, empty test set, ...).
    Usage(String),
    /// A run configuration failed validation; the message names the field.
    Config(String),
    /// A serialized artifact (checkpoint, dataset) could not be parsed.
    Format(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape { op, lhs, rhs } => {
                write!(f, "shape mismatch in {op}: lhs={lhs:?}, rhs={rhs:?}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Config(msg) => write!(f, "invalid config: {msg}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

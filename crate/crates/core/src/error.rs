use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("digit {digit} at stream index {index}, coordinate {coordinate} is outside 0..{base}")]
    DigitOutOfRange {
        index: usize,
        coordinate: usize,
        digit: u64,
        base: u64,
    },

    #[error("digit stream period must be non-empty")]
    EmptyPeriod,

    #[error("digit stream must have dimension at least 1")]
    ZeroDimension,

    #[error("shift {shift} in coordinate {coordinate} cannot be absorbed within {depth} digits of base {base}")]
    ShiftNotAbsorbable {
        coordinate: usize,
        shift: String,
        depth: u64,
        base: u64,
    },

    #[error("a family in R^{dimension} needs exactly {} grids, found {found}", dimension + 1)]
    FamilySize { dimension: usize, found: usize },

    #[error("coordinate {coordinate} out of range for dimension {dimension}")]
    CoordinateOutOfRange { coordinate: usize, dimension: usize },

    #[error("grid index {index} out of range for a family of {len}")]
    GridIndexOutOfRange { index: usize, len: usize },

    #[error("no near-coincidence at scale {scale}: normalized gap {normalized_gap} is not below {required}")]
    NoNearCoincidence {
        scale: i64,
        normalized_gap: String,
        required: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}: {message}")]
    Input { path: String, message: String },
}

impl Error {
    pub(crate) fn input(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input {
            path: path.into(),
            message: message.into(),
        }
    }
}

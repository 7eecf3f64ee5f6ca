use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("negative block size in multinomial: {0}")]
    NegativePart(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("not a virtual character: inner product with {0} is not an integer")]
    NotACharacter(String),

    #[error("negative multiplicity in {context}: {detail}")]
    NegativeMultiplicity { context: String, detail: String },

    #[error("malformed multidegree pattern: {0}")]
    MalformedPattern(String),

    #[error("pattern out of range: {0}")]
    PatternOutOfRange(String),

    #[error("degree bound exceeded: {requested} > {limit}")]
    DegreeLimit { limit: usize, requested: usize },

    #[error("subspace is not stable under the group element: {0}")]
    StabilityViolation(String),

    #[error("invalid n: {0}")]
    InvalidN(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

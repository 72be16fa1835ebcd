use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure of polynomial text parsing; `pos` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VarCountMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no order")]
    ZeroPolynomial,

    #[error("not a germ at the origin: constant term is {0}")]
    NotAGerm(String),

    #[error("point is not a critical point: gradient there is ({0})")]
    NotCritical(String),

    #[error("0 is not an isolated singularity of {0}")]
    NotIsolated(String),

    #[error("standard basis exceeded its budget of {limit} steps")]
    IterationCap { limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed s-sequence: {index} does not divide s_{index} = {value}")]
    MalformedSSequence { index: u32, value: i64 },

    #[error("inconsistent resolution data: {0}")]
    InconsistentResolution(String),

    #[error("characteristic polynomial convention violated: {0}")]
    ConventionViolation(String),

    #[error("line lies inside the tangent cone at t = {0}")]
    LineInsideCone(String),

    #[error("search exhausted: {0}")]
    NotFound(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Engine diagnostics signal that a computation could not be completed
    /// or produced self-inconsistent data, as opposed to bad user input.
    pub fn is_engine_diagnostic(&self) -> bool {
        matches!(self, Error::IterationCap { .. } | Error::ConventionViolation(_) | Error::MalformedSSequence { .. })
    }
}

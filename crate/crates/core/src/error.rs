use thiserror::Error;

/// Errors raised by the algebra kernels, the stratifier and the job layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("leading data of the zero polynomial is undefined")]
    ZeroLead,

    #[error("target degree {target} is below the polynomial degree {degree}")]
    Degree { target: u64, degree: u64 },

    #[error("order matrix is not of full rank")]
    RankDeficient,

    #[error("monomial order `{0}` is not global")]
    NotGlobal(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("size cap exceeded for {what}: {value} > {cap}")]
    SizeCap { what: &'static str, value: u64, cap: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("iteration limit reached in {0}")]
    IterationLimit(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("q-factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("series constant term is not 1")]
    ConstantTermNotOne,
    #[error("series constant term is not 0")]
    NonzeroConstantTerm,
    #[error("denominator vanishes at u = 0")]
    PoleAtOrigin,
    #[error("no rational function with numerator degree {num} and denominator degree {den} matches the series")]
    DegreeMismatch { num: usize, den: usize },
    #[error("series known to order {order}, need at least {needed}")]
    SeriesTooShort { order: usize, needed: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("{0} is not a positive root")]
    NotAPositiveRoot(String),
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("index {index} out of range for rank {l}")]
    IndexOutOfRange { index: usize, l: usize },
    #[error("invalid representation: {0}")]
    InvalidSpec(String),
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("operator {op} does not act diagonally on {state}")]
    NotDiagonal { op: String, state: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("operands live in different ambient rings")]
    AmbientMismatch,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("the defining ideal contains 1; the quotient is the zero ring")]
    TrivialRing,
    #[error("input is zero in the ring")]
    ZeroInput,
    #[error("the fractional superideal is zero")]
    ZeroIdeal,
    #[error("denominator is zero or a zerodivisor")]
    ZerodivisorDenominator,
    #[error("expected a homogeneous element")]
    NotHomogeneous,
    #[error("expected an even element")]
    NotEven,
    #[error("ideal is not certified prime")]
    NotPrime,
    #[error("not a rational maximal ideal: {0}")]
    NonRationalPoint(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("constant or zero polynomial where a nonconstant univariate polynomial was expected")]
    ConstantInput,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("too many odd variables: {got} (cap {cap})")]
    TooManyOddVariables { got: usize, cap: usize },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

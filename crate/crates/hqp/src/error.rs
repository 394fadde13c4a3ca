//! Crate-wide error type.

use thiserror::Error;

/// Position of a parse error inside its source text (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub col: usize,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    // -- field arithmetic ------------------------------------------------
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("modulus is reducible: {0}")]
    ReducibleModulus(String),
    #[error("{0} is not prime")]
    NotPrime(u64),

    // -- polynomials and orders ------------------------------------------
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    // -- parsing ----------------------------------------------------------
    #[error("syntax error at {location}: {message}")]
    SyntaxError { location: Location, message: String },
    #[error("unknown variable `{name}` at {location}")]
    UnknownVariable { name: String, location: Location },
    #[error("coefficient not in the field at {location}: {message}")]
    CoefficientNotInField { location: Location, message: String },
    #[error("{got} weights given for {expected} variables")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("weights must be positive")]
    NonPositiveWeight,

    // -- staircases and Hilbert data --------------------------------------
    #[error("staircase is infinite")]
    InfiniteStaircase,
    #[error("monomial ideal is the unit ideal")]
    UnitIdeal,
    #[error("internal: non-integer intermediate value in the Hilbert recurrence at k = {0}")]
    NonIntegerIntermediate(u64),
    #[error("internal: negative Hilbert function value at k = {0}")]
    NegativeValue(u64),
    #[error("internal: singular interpolation system")]
    SingularSystem,

    // -- codes -------------------------------------------------------------
    #[error("internal: evaluation matrix is rank-deficient")]
    RankDeficient,
    #[error("semigroup query {0} exceeds the membership bound {1}")]
    BoundExceeded(u64, u64),
    #[error("the pair is not a certified order domain; semigroup bounds are unavailable")]
    NotOrderDomain,

    // -- budgets -----------------------------------------------------------
    #[error("resource budget exhausted: {0}")]
    ResourceExhausted(String),
}

impl Error {
    /// Stable machine-readable tag, used by the JSON error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::ReducibleModulus(_) => "ReducibleModulus",
            Error::NotPrime(_) => "NotPrime",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::RingMismatch => "RingMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::UnknownVariable { .. } => "UnknownVariable",
            Error::CoefficientNotInField { .. } => "CoefficientNotInField",
            Error::WeightCountMismatch { .. } => "WeightCountMismatch",
            Error::NonPositiveWeight => "NonPositiveWeight",
            Error::InfiniteStaircase => "InfiniteStaircase",
            Error::UnitIdeal => "UnitIdeal",
            Error::NonIntegerIntermediate(_) => "NonIntegerIntermediate",
            Error::NegativeValue(_) => "NegativeValue",
            Error::SingularSystem => "SingularSystem",
            Error::RankDeficient => "RankDeficient",
            Error::BoundExceeded(_, _) => "BoundExceeded",
            Error::NotOrderDomain => "NotOrderDomain",
            Error::ResourceExhausted(_) => "ResourceExhausted",
        }
    }

    /// Location of the error in the input text, if it has one.
    pub fn location(&self) -> Option<Location> {
        match self {
            Error::SyntaxError { location, .. }
            | Error::UnknownVariable { location, .. }
            | Error::CoefficientNotInField { location, .. } => Some(*location),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced by the exact-arithmetic and combinatorial layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible discriminants: sqrt({0}) and sqrt({1}) span different fields")]
    IncompatibleDiscriminants(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("triple ({0}, {1}, {2}) is not a primitive Pythagorean triple")]
    NotPrimitive(String, String, String),

    #[error("slope {0}/{1} is not in lowest terms")]
    NotCoprime(u64, u64),

    #[error("operation requires a nontrivial Christoffel word, got {0:?}")]
    TrivialWord(String),

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("trace {0} does not yield an integral Markoff number")]
    NonIntegralTrace(String),

    #[error("({0}; {1}, {2}) is not a Markoff triple")]
    InvalidTriple(String, String, String),

    #[error("point is not on the unit quarter circle")]
    NotOnQuarterCircle,

    #[error("digit {0} is not a digit in 1..=3")]
    InvalidDigit(u32),

    #[error("word {0:?} is not a lower Christoffel word")]
    NotChristoffel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

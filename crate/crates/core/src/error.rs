use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Weyl group has {required} elements, above the enumeration cap {cap}")]
    WeylCapExceeded { required: u64, cap: u64 },

    #[error("weight is not {0}")]
    NotInSet(&'static str),

    #[error("modulus p = {0} must be at least 2")]
    InvalidModulus(i64),

    #[error("mixed moduli: {0} and {1}")]
    ModulusMismatch(i64, i64),

    #[error("digit vector out of range [0, {max}]: {digits:?}")]
    DigitsOutOfRange { digits: Vec<i64>, max: i64 },

    #[error("not a reduced word of the longest element: {0:?}")]
    NotLongestWord(Vec<usize>),

    #[error("narrow condition violated: (sqrt(p) lambda_p + rho, theta) = {lhs} > p = {p}")]
    NotNarrow { lhs: i64, p: i64 },

    #[error("series bases {0} and {1} do not differ by an integer")]
    IncompatibleBases(Rational, Rational),

    #[error("series truncated too early: order {required} required, {available} available")]
    OrderUnderflow { required: i64, available: i64 },

    #[error("coefficient overflow")]
    Overflow,

    #[error("unknown check: {0}")]
    UnknownCheck(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

use thiserror::Error;

use crate::exact::{ExactInt, ExactRat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),

    #[error("quadratic ring mismatch: discriminant {left} vs {right}")]
    DiscriminantMismatch { left: ExactInt, right: ExactInt },

    #[error("division by zero")]
    DivisionByZero,

    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("series constant term must be {expected}, found {found}")]
    ConstantTerm { expected: Box<ExactRat>, found: Box<ExactRat> },

    #[error("coefficient index {index} is outside truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("discriminant {0} is not the square of a rational")]
    NonSquareDiscriminant(ExactRat),

    #[error("n = {n} exceeds the oracle bound {bound}")]
    OracleBound { n: usize, bound: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

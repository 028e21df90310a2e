use thiserror::Error;

use crate::scalar::{Interval, Rational};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parameter {index} = {value} lies outside its interval {interval}")]
    OutsideBox {
        index: usize,
        value: Box<Rational>,
        interval: Box<Interval>,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("center matrix A(p̌) is singular")]
    CenterSingular,

    #[error("polynomial is identically zero")]
    IdenticallyZero,

    #[error("resultant vanishes identically: the polynomials share a factor")]
    SharedFactor,

    #[error("denominator has a real root in {pole}")]
    PoleInInterval { pole: Box<Interval> },

    #[error("invalid subset size t = {t} (expected 1 ≤ t ≤ {max})")]
    InvalidSubsetSize { t: usize, max: usize },

    #[error("dimension {n} too large for this operation (max {max})")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

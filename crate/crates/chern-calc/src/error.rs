//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: u32, got: u32 },
    #[error("degree must be at least 1, got {got}")]
    DegreeTooSmall { got: String },
    #[error("exp requires a zero constant term, found {found}")]
    ExpConstantTerm { found: String },
    #[error("log requires constant term 1, found {found}")]
    LogConstantTerm { found: String },
    #[error("series division requires an invertible constant term, found {found}")]
    SeriesDivision { found: String },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("exact division left remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("mismatched generator tables: {left} vs {right}")]
    GeneratorMismatch { left: String, right: String },
    #[error("partition parts must be positive integers")]
    PartitionPart,
    #[error("partition {partition} must sum to {expected}")]
    PartitionSum { partition: String, expected: u32 },
    #[error("coefficient of h^{power} is not a polynomial in y (denominator {denominator})")]
    NonPolynomialCoefficient { power: usize, denominator: String },
    #[error("expected an integer value, found {found}")]
    NonIntegerValue { found: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

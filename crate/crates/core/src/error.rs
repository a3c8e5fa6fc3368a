use thiserror::Error;

use crate::field::FieldDesc;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported (p = 2)")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDesc, FieldDesc),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("attempt to invert zero")]
    DivisionByZero,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("the {0} Leibniz identity does not hold; the operation requires it")]
    IdentityViolation(&'static str),
    #[error("the algebra is not a Lie algebra; the operation requires one")]
    NotLie,
    #[error("operator space is not closed under its bracket")]
    NotClosed,
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("invalid scalar literal `{literal}` for {field}: {reason}")]
    InvalidScalar {
        literal: String,
        field: FieldDesc,
        reason: String,
    },
    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },
    #[error("isomorphism search is only supported over prime fields; use explicit map verification over Q")]
    InfiniteFieldSearch,
}

pub type Result<T> = std::result::Result<T, Error>;

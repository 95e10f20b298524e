use thiserror::Error;

/// Errors produced by the library. Each variant maps onto one CLI exit class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of order {m} in GF({q})")]
    NoSuchElement { m: u64, q: u64 },
    #[error("characteristic {p} divides {m}")]
    UnsupportedCharacteristic { p: u64, m: u64 },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("lemma violation: {0}")]
    LemmaViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

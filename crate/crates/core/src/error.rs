use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid species parameters: {0}")]
    InvalidSpecies(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),
    #[error("modular automorphism group at object {object} (|Aut| = {order}, char {characteristic}); use the free resolution instead")]
    RegimeViolation { object: usize, order: u128, characteristic: u64 },
    #[error("minimal resolution did not terminate within {0} steps")]
    LengthExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

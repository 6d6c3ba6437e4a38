use sgsf_algebra::AlgebraError;
use sgsf_basis::BasisError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RhsError {
    #[error("seminorm '{spec}' at p={p} exceeds the double range")]
    Overflow { spec: &'static str, p: u32 },
    #[error("seminorm '{spec}' is defined on {expected}, got {got}")]
    FamilyMismatch {
        spec: &'static str,
        expected: &'static str,
        got: &'static str,
    },
    #[error("series for {family} at p={p} diverges")]
    Divergent { family: &'static str, p: u32 },
    #[error("{what} is not available for {family}")]
    Unsupported { family: &'static str, what: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

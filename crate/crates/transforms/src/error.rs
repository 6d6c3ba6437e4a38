use sgsf_algebra::AlgebraError;
use sgsf_basis::BasisError;
use sgsf_quadrature::QuadError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error("plan for {plan} cannot integrate {family}")]
    PlanMismatch { plan: &'static str, family: &'static str },
    #[error("{family} plans take {expected} axis orders, got {got}")]
    PlanOrders { family: &'static str, expected: usize, got: usize },
    #[error("index {0:?} is outside the span")]
    OutsideSpan(Vec<i64>),
    #[error("{0} is not a circle-harmonic vector")]
    NotCircle(&'static str),
    #[error("function is not finite at plan node {0:?}")]
    NonFinite(Vec<f64>),
    #[error("invalid cross-family parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

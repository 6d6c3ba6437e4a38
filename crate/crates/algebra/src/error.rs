use sgsf_basis::BasisError;
use sgsf_quadrature::QuadError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("generator {generator} acts on {expected}, vector belongs to {got}")]
    FamilyMismatch {
        generator: String,
        expected: &'static str,
        got: &'static str,
    },
    #[error("window overflow: {generator} maps {at:?} to {target:?} outside the window")]
    WindowOverflow {
        generator: String,
        at: Vec<i64>,
        target: Vec<i64>,
    },
    #[error("{generator} maps {at:?} to invalid index {target:?} with non-zero amplitude")]
    InvalidTarget {
        generator: String,
        at: Vec<i64>,
        target: Vec<i64>,
    },
    #[error("{generator} has non-finite amplitude at {at:?}")]
    NonFiniteAmplitude { generator: String, at: Vec<i64> },
    #[error("index {0:?} lies outside the window")]
    OutsideWindow(Vec<i64>),
    #[error("window has {window} components, family needs {family}")]
    WindowArity { window: usize, family: usize },
    #[error("empty interior subwindow")]
    EmptyInterior,
    #[error("unknown algebra '{0}'")]
    UnknownAlgebra(String),
    #[error("unknown generator '{generator}' in {algebra}")]
    UnknownGenerator { generator: String, algebra: &'static str },
    #[error("{0} has no registered differential realization")]
    NoRealization(String),
    #[error("{0} is not a diagonal generator with a linear eigenvalue")]
    NotCartan(String),
    #[error("{ladder} has no single weight under {cartan}")]
    NotHomogeneous { ladder: String, cartan: String },
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

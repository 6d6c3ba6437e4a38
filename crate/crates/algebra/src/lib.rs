//! Index-shift generators acting on finite coefficient windows of the
//! special-function families, with residual checks for commutators,
//! Casimirs, adjointness and weights, and pointwise comparison against the
//! differential realizations.

pub mod checks;
pub mod coeff;
pub mod differential;
mod error;
pub mod generator;
pub mod suite;
pub mod tables;
pub mod window;

pub use checks::{
    adjoint_pair_residual, cartan_weight_residual, casimir_residual, commutator_residual, expr_residual,
    expr_residual_from,
    CasimirReport, Residual, WeightReport,
};
pub use coeff::CoeffVec;
pub use differential::{differential_consistency, multiplication_matrix_residual, DiffReport, Realization};
pub use error::AlgebraError;
pub use generator::{GeneratorSpec, Linear, Mode, OpExpr, Term};
pub use suite::{run_relations, run_relations_of, CheckKind, RelationResult};
pub use tables::{algebra, fourier_j, laguerre_position, Algebra, AlgebraId};
pub use window::Window;

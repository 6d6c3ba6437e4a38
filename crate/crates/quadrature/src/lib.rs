//! Quadrature rules for the integrals that orthonormality and transform
//! checks reduce to.
//!
//! Gauss rules (Legendre, generalized Laguerre, Hermite) start from the
//! eigenvalues of the Jacobi matrix, are polished by Newton iteration on the
//! orthonormal recurrence, and take their weights from the Christoffel
//! function. Weights are also kept in log form so that rules of high order on
//! unbounded domains never underflow silently.

mod rule;
mod sum;

pub use rule::{build_rule, Domain, QuadError, QuadRule, RuleKind};
pub use sum::{CompensatedSum, ComplexSum};

//! Seminorm families of the test spaces, continuity inequalities of the
//! generators between them, uniform kernel bounds and the constants of the
//! point-evaluation functionals.

pub mod bounds;
pub mod constants;
pub mod continuity;
mod error;
pub mod functional;
pub mod random;
pub mod seminorm;

pub use bounds::{kernel_bound_check, KernelBoundReport};
pub use constants::{assoc_laguerre_constant, continuity_constant, ConstantReport};
pub use continuity::{
    continuity_cases, continuity_inequality_check, domination_check, BoundShape, ContinuityCase,
    ContinuityReport, DominationReport, Expectation,
};
pub use error::RhsError;
pub use functional::{functional_bound_check, FunctionalReport};
pub use seminorm::{ln_seminorm, lookup, registry, seminorm, Flavor, SeminormSpec, WeightRule};

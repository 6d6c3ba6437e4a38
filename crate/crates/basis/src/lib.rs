//! Evaluation of the orthonormal families used throughout the workspace:
//! circle harmonics, Hermite functions, Laguerre functions `M_n^a`,
//! associated Laguerre functions on the half-line and the plane, spherical
//! harmonics, algebraic Jacobi functions and their hypersphere lift, and
//! Zernike radial polynomials with the W-Zernike disk functions.
//!
//! Half-integer quantum numbers are carried as doubled integers. Every
//! evaluator validates its index with integer arithmetic only.

mod error;
mod eval;
pub mod families;
mod index;
pub mod ode;
pub mod special;

pub use error::BasisError;
pub use eval::{evaluate, evaluate_scaled, orthonormal_scale, Measure};
pub use index::{format_half, parse_half, FamilyId, MultiIndex};

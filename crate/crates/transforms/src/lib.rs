//! Discrete and continuous descriptions of the same vectors: coefficients by
//! quadrature, point values by synthesis, and the identities between them.
//!
//! Continuous kets are never stored. A point `x` acts as the functional
//! "evaluate the synthesized truncation at `x`".

mod analysis;
mod cross;
mod error;
mod fourier;
mod hypersphere;
mod plan;
mod probes;

pub use analysis::{
    analyze, analyze_indices, basis_matrix, class_key, gram_residual, kernel_projection_residual,
    ortho_classes, parseval_residual, round_trip_residual, synthesize, Analysis, GramReport,
};
pub use cross::{cross_family_residual, relation_points, CrossRelation, CrossReport, ZernikeReading};
pub use error::TransformError;
pub use fourier::{
    ft_min_order, ft_order_sweep, hermite_ft_residual, improves_monotonically, momentum_grid,
    rotate_circle, rotation_covariance_residual, FtReport,
};
pub use hypersphere::{hypersphere_orthogonality, HypersphereObservation};
pub use probes::{probe_points, HALF_LINE_PROBE, LINE_PROBE};
pub use plan::{required_orders, Axis, QuadPlan, Substitution};

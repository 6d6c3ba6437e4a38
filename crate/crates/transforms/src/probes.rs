//! Deterministic probe points on each family domain.

use sgsf_basis::FamilyId;
use std::f64::consts::{PI, TAU};

/// Half-line probes stay in `[0, HALF_LINE_PROBE]`.
pub const HALF_LINE_PROBE: f64 = 20.0;
/// Real-line probes stay in `[-LINE_PROBE, LINE_PROBE]`.
pub const LINE_PROBE: f64 = 6.0;

/// Additive recurrence with the generalized golden ratios, one irrational
/// step per coordinate.
fn unit_point(k: usize, dim: usize) -> Vec<f64> {
    // root of x^{d+1} = x + 1
    let mut g: f64 = 2.0;
    for _ in 0..64 {
        g = (1.0 + g).powf(1.0 / (dim as f64 + 1.0));
    }
    (1..=dim)
        .map(|i| (0.5 + (k as f64 + 1.0) * g.powi(-(i as i32))).fract())
        .collect()
}

/// `count` points in natural coordinates, quasi-uniform on the domain.
pub fn probe_points(family: FamilyId, count: usize) -> Vec<Vec<f64>> {
    (0..count)
        .map(|k| {
            let u = unit_point(k, family.dimension());
            match family {
                FamilyId::FourierCircle => vec![TAU * u[0]],
                FamilyId::Hermite => vec![LINE_PROBE * (2.0 * u[0] - 1.0)],
                FamilyId::LaguerreM { .. } | FamilyId::AssocLaguerre => vec![HALF_LINE_PROBE * u[0]],
                FamilyId::PlaneZ => vec![HALF_LINE_PROBE.sqrt() * u[0], TAU * u[1] - PI],
                FamilyId::SphericalY => vec![(1.0 - 2.0 * u[0]).acos(), TAU * u[1]],
                FamilyId::JacobiJ => vec![2.0 * u[0] - 1.0],
                FamilyId::HypersphereN => vec![2.0 * u[0] - 1.0, TAU * u[1], PI * u[2]],
                FamilyId::ZernikeR => vec![u[0]],
                FamilyId::ZernikeW => vec![u[0].sqrt(), TAU * u[1]],
            }
        })
        .collect()
}

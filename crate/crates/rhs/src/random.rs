//! Seeded random coefficient vectors with geometric decay.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgsf_algebra::{CoeffVec, Window};
use sgsf_basis::FamilyId;
use std::f64::consts::TAU;

use crate::error::RhsError;

/// Decay ratios are drawn from `[RHO_MIN, RHO_MAX]`.
pub const RHO_MIN: f64 = 0.1;
pub const RHO_MAX: f64 = 0.7;

/// Degree used by the decay profile.
pub fn degree(family: FamilyId, idx: &[i64]) -> f64 {
    match family {
        FamilyId::FourierCircle => idx[0].abs() as f64,
        FamilyId::Hermite | FamilyId::LaguerreM { .. } | FamilyId::SphericalY | FamilyId::ZernikeR => idx[0] as f64,
        FamilyId::AssocLaguerre | FamilyId::PlaneZ | FamilyId::JacobiJ | FamilyId::HypersphereN => idx[0] as f64 / 2.0,
        FamilyId::ZernikeW => (idx[0] + idx[1]) as f64,
    }
}

/// Independent stream per `(seed, trial)`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `|a_i| = rho^degree(i)` with uniform phases; returns the vector and `rho`.
pub fn random_vector(family: FamilyId, window: &Window, seed: u64, trial: u64) -> Result<(CoeffVec, f64), RhsError> {
    let mut rng = trial_rng(seed, trial);
    let rho = rng.gen_range(RHO_MIN..=RHO_MAX);
    let entries: Vec<(Vec<i64>, Complex64)> = window
        .indices(family)
        .into_iter()
        .map(|idx| {
            let a = rho.powf(degree(family, &idx));
            let phase = rng.gen_range(0.0..TAU);
            (idx, Complex64::from_polar(a, phase))
        })
        .collect();
    Ok((CoeffVec::from_entries(family, window.clone(), entries)?, rho))
}

//! Uniform bounds on basis functions, sampled on the family domain.

use rand::Rng;
use sgsf_algebra::Window;
use sgsf_basis::special::ln_gamma;
use sgsf_basis::{evaluate, FamilyId, MultiIndex};
use std::f64::consts::{LN_2, PI, TAU};

use crate::error::RhsError;
use crate::random::trial_rng;

/// Sampling range of `x` on the half-line.
pub const HALF_LINE_MAX: f64 = 80.0;

/// Ratios above `1 + BOUND_SLACK` fail.
pub const BOUND_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct KernelBoundReport {
    pub family: FamilyId,
    pub indices: usize,
    pub samples: usize,
    /// `max |value| / bound`
    pub max_ratio: f64,
    pub worst_index: Vec<i64>,
    pub worst_point: Vec<f64>,
}

impl KernelBoundReport {
    pub fn holds(&self) -> bool {
        self.max_ratio <= 1.0 + BOUND_SLACK
    }
}

/// `2^{3|m|} (j!)^2 ((j+|m|)!)^{1/2} / (|m|! ((j-|m|)!)^{5/2})` in log form.
pub fn ln_lemma_bound(two_j: i64, two_m: i64) -> f64 {
    let j = two_j as f64 / 2.0;
    let m = (two_m as f64 / 2.0).abs();
    let lf = |x: f64| ln_gamma(x + 1.0);
    3.0 * m * LN_2 + 2.0 * lf(j) + 0.5 * lf(j + m) - lf(m) - 2.5 * lf(j - m)
}

/// Uniform bound on the unscaled family member, if one is registered.
pub fn bound(family: FamilyId, idx: &[i64]) -> Result<f64, RhsError> {
    Ok(match family {
        FamilyId::AssocLaguerre | FamilyId::PlaneZ => ln_lemma_bound(idx[0], idx[1]).exp(),
        FamilyId::SphericalY => 1.0 / TAU.sqrt(),
        FamilyId::ZernikeR => 1.0,
        FamilyId::ZernikeW => ((idx[0] + idx[1] + 1) as f64 / PI).sqrt(),
        other => {
            return Err(RhsError::Unsupported {
                family: other.tag(),
                what: "a uniform kernel bound",
            })
        }
    })
}

fn sample(family: FamilyId, rng: &mut impl Rng) -> Vec<f64> {
    match family {
        FamilyId::AssocLaguerre => vec![rng.gen_range(0.0..=HALF_LINE_MAX)],
        FamilyId::PlaneZ => vec![rng.gen_range(0.0..=HALF_LINE_MAX.sqrt()), rng.gen_range(0.0..TAU)],
        FamilyId::SphericalY => vec![rng.gen_range(0.0..=PI), rng.gen_range(0.0..TAU)],
        FamilyId::ZernikeR => vec![rng.gen_range(0.0..=1.0)],
        _ => vec![rng.gen_range(0.0..=1.0), rng.gen_range(0.0..TAU)],
    }
}

/// Max over window indices and `samples` uniform points of `|b| / bound`.
/// The half-line is sampled on `[0, HALF_LINE_MAX]`.
pub fn kernel_bound_check(
    family: FamilyId,
    window: &Window,
    samples: usize,
    seed: u64,
) -> Result<KernelBoundReport, RhsError> {
    let indices = window.indices(family);
    let bounds = indices
        .iter()
        .map(|idx| bound(family, idx))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rng = trial_rng(seed, 0);
    let mut report = KernelBoundReport {
        family,
        indices: indices.len(),
        samples,
        max_ratio: 0.0,
        worst_index: Vec::new(),
        worst_point: Vec::new(),
    };
    for _ in 0..samples {
        let point = sample(family, &mut rng);
        for (idx, b) in indices.iter().zip(&bounds) {
            let mi = MultiIndex::new(family, idx.clone())?;
            let ratio = evaluate(&mi, &point)?.norm() / b;
            if ratio > report.max_ratio {
                report.max_ratio = ratio;
                report.worst_index = idx.clone();
                report.worst_point = point.clone();
            }
        }
    }
    Ok(report)
}

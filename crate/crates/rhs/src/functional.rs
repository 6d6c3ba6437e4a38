//! Point-evaluation functionals on truncated expansions.

use num_complex::Complex64;
use sgsf_algebra::Window;
use sgsf_basis::{evaluate_scaled, MultiIndex};

use crate::error::RhsError;
use crate::random::random_vector;
use crate::seminorm::{seminorm, SeminormSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalReport {
    pub trials: usize,
    pub points: usize,
    pub violations: usize,
    /// `max |<f|x>| / (K ||f||_p)`
    pub max_ratio: f64,
    pub seed: u64,
}

/// `|<f|x>| = |sum_i a_i^* b_i(x)^*| <= K ||f||_p` for random `f` in `window`
/// at every point of `points`.
pub fn functional_bound_check(
    spec: &SeminormSpec,
    window: &Window,
    p: u32,
    constant: f64,
    points: &[Vec<f64>],
    trials: usize,
    seed: u64,
) -> Result<FunctionalReport, RhsError> {
    let family = spec.family;
    let indices = window.indices(family);
    let mut table = Vec::with_capacity(points.len());
    for x in points {
        let row = indices
            .iter()
            .map(|i| evaluate_scaled(&MultiIndex::new(family, i.clone())?, x))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    let mut report = FunctionalReport {
        trials,
        points: points.len(),
        violations: 0,
        max_ratio: 0.0,
        seed,
    };
    for trial in 0..trials as u64 {
        let (f, _) = random_vector(family, window, seed, trial)?;
        let bound = constant * seminorm(&f, spec, p)?;
        for row in &table {
            let value: Complex64 = indices.iter().zip(row).map(|(i, b)| (f.get(i) * b).conj()).sum();
            let ratio = value.norm() / bound;
            report.max_ratio = report.max_ratio.max(ratio);
            if ratio > 1.0 + crate::continuity::SLACK {
                report.violations += 1;
            }
        }
    }
    Ok(report)
}

//! The circle's regular representation and the Hermite eigenrelation of the
//! Fourier transform.

use num_complex::Complex64;
use sgsf_algebra::CoeffVec;
use sgsf_basis::families::hermite::hermite;
use sgsf_basis::FamilyId;
use sgsf_quadrature::{build_rule, ComplexSum, RuleKind};
use std::f64::consts::{PI, SQRT_2, TAU};

use crate::analysis::synthesize;
use crate::error::TransformError;

/// `a_m -> e^{i m theta} a_m`, so that the synthesized function is shifted:
/// `f(phi) -> f(phi - theta)`.
pub fn rotate_circle(v: &CoeffVec, theta: f64) -> Result<CoeffVec, TransformError> {
    if v.family() != FamilyId::FourierCircle {
        return Err(TransformError::NotCircle(v.family().tag()));
    }
    let entries: Vec<_> = v
        .iter()
        .map(|(idx, a)| (idx.to_vec(), a * Complex64::from_polar(1.0, idx[0] as f64 * theta)))
        .collect();
    Ok(CoeffVec::from_entries(v.family(), v.window().clone(), entries)?)
}

/// `max |synthesize(rotate(v, theta))(phi) - synthesize(v)(phi - theta)|`
/// over the probe angles, with `phi - theta` reduced to `[0, 2 pi)`.
pub fn rotation_covariance_residual(v: &CoeffVec, theta: f64, probes: &[f64]) -> Result<f64, TransformError> {
    let rotated = rotate_circle(v, theta)?;
    let at: Vec<Vec<f64>> = probes.iter().map(|&p| vec![p]).collect();
    let shifted: Vec<Vec<f64>> = probes.iter().map(|&p| vec![(p - theta).rem_euclid(TAU)]).collect();
    let lhs = synthesize(&rotated, &at)?;
    let rhs = synthesize(v, &shifted)?;
    Ok(lhs.iter().zip(&rhs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FtReport {
    pub n: u32,
    pub order: usize,
    /// `max_p |F psi_n(p) - (-i)^n psi_n(p)|`
    pub residual: f64,
    pub warnings: Vec<String>,
}

/// Smallest Gauss-Hermite order treated as adequate for `psi_n`.
pub fn ft_min_order(n: u32) -> usize {
    4 * n as usize + 40
}

/// Evaluates `(1/sqrt(2 pi)) integral e^{-i p x} psi_n(x) dx` at each `p` by a
/// Gauss-Hermite rule in `t = x / sqrt 2`, so the remaining integrand is a
/// polynomial times `e^{-i p sqrt2 t}`, and compares with `(-i)^n psi_n(p)`.
pub fn hermite_ft_residual(n: u32, order: usize, p_grid: &[f64]) -> Result<FtReport, TransformError> {
    let rule = build_rule(RuleKind::Hermite, order, None)?;
    let mw = rule.measure_weights();
    let samples: Vec<(f64, f64)> = rule
        .nodes()
        .iter()
        .zip(&mw)
        .map(|(&t, &w)| {
            let x = SQRT_2 * t;
            (x, SQRT_2 * w * hermite(n, x))
        })
        .collect();
    let eigen = Complex64::new(0.0, -1.0).powu(n);
    let c = 1.0 / (2.0 * PI).sqrt();
    let mut residual: f64 = 0.0;
    for &p in p_grid {
        let mut acc = ComplexSum::new();
        for &(x, wf) in &samples {
            acc.add(Complex64::from_polar(wf, -p * x));
        }
        residual = residual.max((acc.value() * c - eigen * hermite(n, p)).norm());
    }
    let mut warnings = Vec::new();
    if order < ft_min_order(n) {
        warnings.push(format!(
            "hermite order {order} is below {} for n = {n}",
            ft_min_order(n)
        ));
    }
    Ok(FtReport {
        n,
        order,
        residual,
        warnings,
    })
}

/// Residuals at each order in turn. `orders` is expected to double.
pub fn ft_order_sweep(n: u32, orders: &[usize], p_grid: &[f64]) -> Result<Vec<FtReport>, TransformError> {
    orders.iter().map(|&o| hermite_ft_residual(n, o, p_grid)).collect()
}

/// Each residual is no larger than the one before, or already at `floor`.
pub fn improves_monotonically(reports: &[FtReport], floor: f64) -> bool {
    reports
        .windows(2)
        .all(|w| w[1].residual <= w[0].residual || w[1].residual <= floor)
}

/// `count` equally spaced momenta on `[-p_max, p_max]`.
pub fn momentum_grid(p_max: f64, count: usize) -> Vec<f64> {
    if count < 2 {
        return vec![0.0; count];
    }
    (0..count)
        .map(|k| -p_max + 2.0 * p_max * k as f64 / (count - 1) as f64)
        .collect()
}

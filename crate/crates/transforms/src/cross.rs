//! Identities between families, evaluated pointwise by independent routes.

use num_complex::Complex64;
use sgsf_basis::families::jacobi::algebraic_jacobi;
use sgsf_basis::families::laguerre::{assoc_laguerre_literal, plane_z};
use sgsf_basis::special::{assoc_legendre, jacobi_poly, ln_factorial};
use sgsf_basis::FamilyId;

use crate::error::TransformError;

/// Which degree the Jacobi side of the Zernike identity carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZernikeReading {
    /// `P_{(n-|m|)/2}^{(|m|, 0)}`
    HalfDegree,
    /// `P_n^{(|m|, 0)}` read off the printed subscript
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CrossRelation {
    /// `P_l^m(x) = (-1)^m sqrt((l+m)!/(l-m)!) J_l^{m,0}(x)` on `[-1, 1]`
    LegendreJacobi { l: i64, m: i64 },
    /// `R_n^m(r) = (-1)^{(n-|m|)/2} r^|m| P^{(|m|,0)}(1 - 2r^2)` on `[0, 1]`
    ZernikeJacobi { n: i64, m: i64, reading: ZernikeReading },
    /// `Z_j^m(r, phi) = e^{i m phi} L_j^m(r^2)` against the literal
    /// negative-order Laguerre formula, `r > 0`; doubled `j`, `m`
    PlaneZConsistency { two_j: i64, two_m: i64 },
}

impl CrossRelation {
    pub fn tag(&self) -> &'static str {
        match self {
            CrossRelation::LegendreJacobi { .. } => "legendre_jacobi",
            CrossRelation::ZernikeJacobi { .. } => "zernike_jacobi",
            CrossRelation::PlaneZConsistency { .. } => "plane_z_consistency",
        }
    }

    pub fn label(&self) -> String {
        match *self {
            CrossRelation::LegendreJacobi { l, m } => format!("legendre_jacobi-l={l},m={m}"),
            CrossRelation::ZernikeJacobi { n, m, reading } => {
                let r = match reading {
                    ZernikeReading::HalfDegree => "half-degree",
                    ZernikeReading::Literal => "literal-degree",
                };
                format!("zernike_jacobi-{r}-n={n},m={m}")
            }
            CrossRelation::PlaneZConsistency { two_j, two_m } => {
                format!("plane_z_consistency-2j={two_j},2m={two_m}")
            }
        }
    }

    /// Coordinates per sample point.
    pub fn dimension(&self) -> usize {
        match self {
            CrossRelation::PlaneZConsistency { .. } => 2,
            _ => 1,
        }
    }

    fn validate(&self) -> Result<(), TransformError> {
        let bad = |s: String| Err(TransformError::InvalidParameters(s));
        match *self {
            CrossRelation::LegendreJacobi { l, m } => {
                if l < 0 || m.abs() > l {
                    return bad(format!("legendre_jacobi needs |m| <= l, got l = {l}, m = {m}"));
                }
            }
            CrossRelation::ZernikeJacobi { n, m, .. } => {
                FamilyId::ZernikeR.validate(&[n, m])?;
                if n > 40 {
                    return bad(format!("zernike_jacobi supports n <= 40, got {n}"));
                }
            }
            CrossRelation::PlaneZConsistency { two_j, two_m } => FamilyId::PlaneZ.validate(&[two_j, two_m])?,
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossReport {
    pub label: String,
    pub points: usize,
    /// `max |lhs - rhs|`
    pub residual: f64,
    /// `max(1, max |lhs|)`
    pub scale: f64,
}

impl CrossReport {
    /// Residual relative to the size of the functions compared. Equals the
    /// plain residual when both sides stay within one in modulus.
    pub fn scaled_residual(&self) -> f64 {
        self.residual / self.scale
    }
}

/// Explicit alternating sum for `R_n^|m|`.
fn zernike_radial_sum(n: i64, m: i64, r: f64) -> f64 {
    let m = m.abs();
    let lf = |k: i64| ln_factorial(k as u64);
    (0..=(n - m) / 2)
        .map(|s| {
            let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
            let c = (lf(n - s) - lf(s) - lf((n + m) / 2 - s) - lf((n - m) / 2 - s)).exp();
            sign * c * r.powi((n - 2 * s) as i32)
        })
        .sum()
}

fn sides(rel: &CrossRelation, p: &[f64]) -> Result<(Complex64, Complex64), TransformError> {
    let re = |v: f64| Complex64::new(v, 0.0);
    Ok(match *rel {
        CrossRelation::LegendreJacobi { l, m } => {
            let lhs = assoc_legendre(l as u32, m as i32, p[0]);
            let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let ratio = (0.5 * (ln_factorial((l + m) as u64) - ln_factorial((l - m) as u64))).exp();
            let rhs = sign * ratio * algebraic_jacobi(2 * l, 2 * m, 0, p[0])?;
            (re(lhs), re(rhs))
        }
        CrossRelation::ZernikeJacobi { n, m, reading } => {
            let r = p[0];
            let a = m.abs();
            let k = (n - a) / 2;
            let degree = match reading {
                ZernikeReading::HalfDegree => k,
                ZernikeReading::Literal => n,
            };
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * r.powi(a as i32) * jacobi_poly(degree as u32, a as f64, 0.0, 1.0 - 2.0 * r * r);
            (re(zernike_radial_sum(n, m, r)), re(rhs))
        }
        CrossRelation::PlaneZConsistency { two_j, two_m } => {
            let (r, phi) = (p[0], p[1]);
            let lhs = plane_z(two_j, two_m, r, phi)?;
            let rhs = Complex64::from_polar(1.0, 0.5 * two_m as f64 * phi) * assoc_laguerre_literal(two_j, two_m, r * r)?;
            (lhs, rhs)
        }
    })
}

/// `max |lhs - rhs|` over the points, in the coordinates of the relation.
pub fn cross_family_residual(rel: &CrossRelation, points: &[Vec<f64>]) -> Result<CrossReport, TransformError> {
    rel.validate()?;
    let mut report = CrossReport {
        label: rel.label(),
        points: points.len(),
        residual: 0.0,
        scale: 1.0,
    };
    for p in points {
        if p.len() != rel.dimension() {
            return Err(TransformError::InvalidParameters(format!(
                "{} takes {} coordinates per point, got {}",
                rel.tag(),
                rel.dimension(),
                p.len()
            )));
        }
        let (lhs, rhs) = sides(rel, p)?;
        report.residual = report.residual.max((lhs - rhs).norm());
        report.scale = report.scale.max(lhs.norm());
    }
    Ok(report)
}

/// `count` equally spaced sample points on the natural domain of the
/// relation: `x` in `[-1, 1]`, `r` in `[0, 1]`, or `(r, phi)` with `r` in
/// `(0, 3]` and `phi` sweeping the circle.
pub fn relation_points(rel: &CrossRelation, count: usize) -> Vec<Vec<f64>> {
    let t = |k: usize| if count < 2 { 0.5 } else { k as f64 / (count - 1) as f64 };
    (0..count)
        .map(|k| match rel {
            CrossRelation::LegendreJacobi { .. } => vec![-1.0 + 2.0 * t(k)],
            CrossRelation::ZernikeJacobi { .. } => vec![t(k)],
            CrossRelation::PlaneZConsistency { .. } => {
                vec![0.05 + 2.95 * t(k), -std::f64::consts::PI + std::f64::consts::TAU * t(k)]
            }
        })
        .collect()
}

//! Differential and multiplicative realizations of generators, compared
//! against their index-shift images.

use num_complex::Complex64;
use sgsf_basis::{evaluate_scaled, FamilyId, MultiIndex};
use sgsf_quadrature::QuadRule;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::checks::Residual;
use crate::coeff::CoeffVec;
use crate::error::AlgebraError;
use crate::generator::{GeneratorSpec, Mode, OpExpr};
use crate::window::Window;

/// Operator on functions of the first natural coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Realization {
    /// `i d/dphi` on circle harmonics
    FourierIDphi,
    /// `(x + d/dx) / sqrt 2`
    HermiteLowering,
    /// `(x - d/dx) / sqrt 2`
    HermiteRaising,
    /// multiplication by `x`
    HermitePosition,
    /// `i d/dx`
    HermiteMomentum,
    /// `y d/dy + N + 1 + (a - y)/2`
    LaguerreRaising { alpha: f64 },
    /// `-y d/dy + N + (a - y)/2`
    LaguerreLowering { alpha: f64 },
    /// `-2 (M + 1/2) d/dx + (2/x) M (M + 1/2) - (J + 1/2)`
    AssocLaguerreRaising,
    /// `2 (M - 1/2) d/dx + (2/x) M (M - 1/2) - (J + 1/2)`
    AssocLaguerreLowering,
    /// multiplication by `r e^{i phi}` on the disk
    DiskMultiplyREiPhi,
}

/// Result of a pointwise comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffReport {
    pub residual: f64,
    /// Largest difference between the two Richardson levels.
    pub fd_error: f64,
    pub points: usize,
}

const H: f64 = 2e-3;

fn five_point<F>(f: &F, t: f64, h: f64) -> Result<Complex64, AlgebraError>
where
    F: Fn(f64) -> Result<Complex64, AlgebraError>,
{
    Ok((f(t - 2.0 * h)? - f(t - h)? * 8.0 + f(t + h)? * 8.0 - f(t + 2.0 * h)?) / (12.0 * h))
}

/// First derivative by one Richardson step on the 5-point stencil, with the
/// level difference as error estimate.
fn derivative<F>(f: F, t: f64) -> Result<(Complex64, f64), AlgebraError>
where
    F: Fn(f64) -> Result<Complex64, AlgebraError>,
{
    let coarse = five_point(&f, t, H)?;
    let fine = five_point(&f, t, 0.5 * H)?;
    Ok(((fine * 16.0 - coarse) / 15.0, (fine - coarse).norm()))
}

fn realize(r: Realization, index: &MultiIndex, point: &[f64]) -> Result<(Complex64, f64), AlgebraError> {
    let c = index.components();
    let along = |t: f64| -> Result<Complex64, AlgebraError> {
        let mut p = point.to_vec();
        p[0] = t;
        Ok(evaluate_scaled(index, &p)?)
    };
    let f = evaluate_scaled(index, point)?;
    let t = point[0];
    let i = Complex64::new(0.0, 1.0);
    Ok(match r {
        Realization::HermitePosition => (f * t, 0.0),
        Realization::DiskMultiplyREiPhi => (f * Complex64::from_polar(t, point[1]), 0.0),
        _ => {
            let (d, err) = derivative(along, t)?;
            let v = match r {
                Realization::FourierIDphi | Realization::HermiteMomentum => i * d,
                Realization::HermiteLowering => (f * t + d) * FRAC_1_SQRT_2,
                Realization::HermiteRaising => (f * t - d) * FRAC_1_SQRT_2,
                Realization::LaguerreRaising { alpha } => {
                    d * t + f * (c[0] as f64 + 1.0 + 0.5 * (alpha - t))
                }
                Realization::LaguerreLowering { alpha } => -d * t + f * (c[0] as f64 + 0.5 * (alpha - t)),
                Realization::AssocLaguerreRaising | Realization::AssocLaguerreLowering => {
                    let j = c[0] as f64 / 2.0;
                    let m = c[1] as f64 / 2.0;
                    let s = if r == Realization::AssocLaguerreRaising { 1.0 } else { -1.0 };
                    let mm = m + 0.5 * s;
                    -d * (2.0 * s * mm) + f * (2.0 * m * mm / t - (j + 0.5))
                }
                Realization::HermitePosition | Realization::DiskMultiplyREiPhi => unreachable!(),
            };
            (v, err)
        }
    })
}

/// Compares the registered realization of `g` on the basis function at
/// `index` with the synthesized shift-rule image, at every point. Points are
/// in the family's natural coordinates and must keep the stencil interior.
pub fn differential_consistency(
    g: &GeneratorSpec,
    index: &MultiIndex,
    points: &[Vec<f64>],
) -> Result<DiffReport, AlgebraError> {
    let r = g.realization().ok_or_else(|| AlgebraError::NoRealization(g.name().to_string()))?;
    let image = g.image(index.components())?;
    let mut residual: f64 = 0.0;
    let mut fd_error: f64 = 0.0;
    for p in points {
        let (lhs, err) = realize(r, index, p)?;
        let mut rhs = Complex64::default();
        for (target, c) in &image {
            let t = MultiIndex::new(index.family(), target.clone())?;
            rhs += c * evaluate_scaled(&t, p)?;
        }
        residual = residual.max((lhs - rhs).norm());
        fd_error = fd_error.max(err);
    }
    Ok(DiffReport {
        residual,
        fd_error,
        points: points.len(),
    })
}

/// Max deviation between `<e_i, expr e_j>` and the quadrature matrix element
/// `int b_i^* m b_j dx` of a one-dimensional family, over window rows and
/// interior columns. The rule integrates against plain measure through its
/// measure weights.
pub fn multiplication_matrix_residual<M>(
    expr: &OpExpr,
    family: FamilyId,
    window: &Window,
    rule: &QuadRule,
    multiplier: M,
) -> Result<Residual, AlgebraError>
where
    M: Fn(f64) -> f64,
{
    let indices = window.indices(family);
    let nodes = rule.nodes();
    let weights = rule.measure_weights();
    let mut table = Vec::with_capacity(indices.len());
    for idx in &indices {
        let mi = MultiIndex::new(family, idx.clone())?;
        let row = nodes
            .iter()
            .map(|&x| evaluate_scaled(&mi, &[x]))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    let mut residual: f64 = 0.0;
    let mut count = 0;
    let mut skipped = 0;
    for (j, idx) in indices.iter().enumerate() {
        let e = CoeffVec::basis(family, window.clone(), idx)?;
        let image = match expr.apply(&e, Mode::Strict) {
            Ok(v) => v,
            Err(AlgebraError::WindowOverflow { .. }) => {
                skipped += 1;
                continue;
            }
            Err(err) => return Err(err),
        };
        count += 1;
        for (i, row) in indices.iter().enumerate() {
            let mut acc = sgsf_quadrature::ComplexSum::new();
            for k in 0..nodes.len() {
                acc.add(table[i][k].conj() * multiplier(nodes[k]) * table[j][k] * weights[k]);
            }
            residual = residual.max((image.get(row) - acc.value()).norm());
        }
    }
    if count == 0 {
        return Err(AlgebraError::EmptyInterior);
    }
    Ok(Residual {
        residual,
        count,
        skipped,
    })
}

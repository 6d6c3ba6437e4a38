//! Differential-equation residuals with 5-point central differences.
//!
//! Every residual is relative: `|sum_k c_k f^(k)| / (|f| + sum_k |c_k f^(k)|)`.
//! The `|f|` term keeps constant solutions, where every term vanishes, from
//! dividing noise by noise.

use crate::error::BasisError;
use crate::families::{hermite, jacobi, laguerre, spherical, zernike};
use crate::index::{FamilyId, MultiIndex};
use crate::special::{jacobi_poly, laguerre_poly};

/// `(f, f', f'')` at `t` using 5-point stencils with step `h`.
pub fn derivatives<F>(f: F, t: f64, h: f64) -> Result<(f64, f64, f64), BasisError>
where
    F: Fn(f64) -> Result<f64, BasisError>,
{
    let fm2 = f(t - 2.0 * h)?;
    let fm1 = f(t - h)?;
    let f0 = f(t)?;
    let fp1 = f(t + h)?;
    let fp2 = f(t + 2.0 * h)?;
    let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    Ok((f0, d1, d2))
}

fn relative(f: f64, terms: &[f64]) -> f64 {
    let total: f64 = terms.iter().sum();
    let scale: f64 = f.abs() + terms.iter().map(|t| t.abs()).sum::<f64>();
    total.abs() / scale.max(1e-300)
}

fn step(degree: f64) -> f64 {
    (1e-2 / (1.0 + degree)).clamp(2e-4, 1e-2)
}

/// Step for functions with a branch point at distance `gap` from `t`.
fn step_near(degree: f64, gap: f64) -> f64 {
    step(degree).min(gap / 50.0)
}

/// `y L'' + (a + 1 - y) L' + n L = 0`.
pub fn laguerre_poly_residual(n: u32, alpha: f64, y: f64) -> Result<f64, BasisError> {
    let (f, d1, d2) = derivatives(|t| Ok(laguerre_poly(n, alpha, t)), y, step(n as f64))?;
    Ok(relative(f, &[y * d2, (alpha + 1.0 - y) * d1, n as f64 * f]))
}

/// `(1-x^2) J'' + (b - a - (a+b+2) x) J' + n (n+a+b+1) J = 0`.
pub fn jacobi_poly_residual(n: u32, a: f64, b: f64, x: f64) -> Result<f64, BasisError> {
    let (f, d1, d2) = derivatives(|t| Ok(jacobi_poly(n, a, b, t)), x, step(n as f64))?;
    let nf = n as f64;
    Ok(relative(f, &[
        (1.0 - x * x) * d2,
        (b - a - (a + b + 2.0) * x) * d1,
        nf * (nf + a + b + 1.0) * f,
    ]))
}

/// Coefficient of `Z/r^p` in the radial plane equation, `p = 2` for the
/// form that follows from substituting `x = r^2`, `p = 1` as sometimes
/// printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneForm {
    Substituted,
    PrintedInverseR,
}

/// Radial plane equation
/// `g'' + g'/r - 4 m^2 g / r^p - r^2 g + 4 (j + 1/2) g = 0` for
/// `g(r) = L_j^m(r^2)`.
pub fn plane_z_residual(two_j: i64, two_m: i64, r: f64, form: PlaneForm) -> Result<f64, BasisError> {
    let j = two_j as f64 / 2.0;
    let m = two_m as f64 / 2.0;
    let (f, d1, d2) = derivatives(|t| laguerre::assoc_laguerre(two_j, two_m, t * t), r, step_near(j, r))?;
    let rp = match form {
        PlaneForm::Substituted => r * r,
        PlaneForm::PrintedInverseR => r,
    };
    Ok(relative(f, &[
        d2,
        d1 / r,
        -4.0 * m * m * f / rp,
        -r * r * f,
        4.0 * (j + 0.5) * f,
    ]))
}

/// ODE residual of a family member at interior coordinate `t`:
/// `x` for Hermite, AssocLaguerre and JacobiJ, `y` for LaguerreM, `r` for
/// PlaneZ and ZernikeR, `cos theta` for SphericalY.
pub fn ode_residual(index: &MultiIndex, t: f64) -> Result<f64, BasisError> {
    let c = index.components();
    match index.family() {
        FamilyId::Hermite => {
            let n = c[0] as u32;
            let (f, _, d2) = derivatives(|x| Ok(hermite::hermite(n, x)), t, step(n as f64))?;
            Ok(relative(f, &[d2, (2.0 * n as f64 + 1.0 - t * t) * f]))
        }
        FamilyId::LaguerreM { alpha } => {
            let n = c[0] as u32;
            // y M'' + M' + (n + (a+1)/2 - y/4 - a^2/(4y)) M = 0
            let (f, d1, d2) = derivatives(|y| laguerre::laguerre_m(n, alpha, y), t, step_near(n as f64, t))?;
            Ok(relative(f, &[
                t * d2,
                d1,
                (n as f64 + 0.5 * (alpha + 1.0)) * f,
                -0.25 * t * f,
                -0.25 * alpha * alpha / t * f,
            ]))
        }
        FamilyId::AssocLaguerre => {
            let (j, m) = (c[0] as f64 / 2.0, c[1] as f64 / 2.0);
            let (f, d1, d2) = derivatives(|x| laguerre::assoc_laguerre(c[0], c[1], x), t, step_near(j, t))?;
            Ok(relative(f, &[t * d2, d1, -m * m / t * f, -0.25 * t * f, (j + 0.5) * f]))
        }
        FamilyId::PlaneZ => plane_z_residual(c[0], c[1], t, PlaneForm::Substituted),
        FamilyId::SphericalY => {
            let (l, m) = (c[0], c[1]);
            let g = |x: f64| -> Result<f64, BasisError> {
                Ok(spherical::sph_harm(l, m, x.clamp(-1.0, 1.0).acos(), 0.0)?.re)
            };
            let (f, d1, d2) = derivatives(g, t, step_near(l as f64, 1.0 - t.abs()))?;
            let lf = l as f64;
            let mf = m as f64;
            Ok(relative(f, &[
                (1.0 - t * t) * d2,
                -2.0 * t * d1,
                lf * (lf + 1.0) * f,
                -mf * mf / (1.0 - t * t) * f,
            ]))
        }
        FamilyId::JacobiJ => {
            let (j, m, q) = (c[0] as f64 / 2.0, c[1] as f64 / 2.0, c[2] as f64 / 2.0);
            let (f, d1, d2) =
                derivatives(|x| jacobi::algebraic_jacobi(c[0], c[1], c[2], x), t, step_near(j, 1.0 - t.abs()))?;
            Ok(relative(f, &[
                -(1.0 - t * t) * d2,
                2.0 * t * d1,
                (2.0 * m * q * t + m * m + q * q) / (1.0 - t * t) * f,
                -j * (j + 1.0) * f,
            ]))
        }
        FamilyId::ZernikeR => {
            let (n, m) = (c[0], c[1]);
            let (f, d1, d2) = derivatives(|r| zernike::zernike_r(n, m, r), t, step((n * n) as f64 / 4.0))?;
            let nf = n as f64;
            let mf = m as f64;
            Ok(relative(f, &[
                (1.0 - t * t) * d2,
                -(3.0 * t - 1.0 / t) * d1,
                nf * (nf + 2.0) * f,
                -mf * mf / (t * t) * f,
            ]))
        }
        other => Err(BasisError::UnknownFamily(format!("no ODE registered for {}", other.tag()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_ground_state() {
        let i = MultiIndex::new(FamilyId::Hermite, vec![0]).unwrap();
        assert!(ode_residual(&i, 0.7).unwrap() < 1e-8);
    }

    #[test]
    fn printed_plane_form_fails_where_substituted_form_holds() {
        let good = plane_z_residual(4, 2, 0.7, PlaneForm::Substituted).unwrap();
        let bad = plane_z_residual(4, 2, 0.7, PlaneForm::PrintedInverseR).unwrap();
        assert!(good < 1e-7, "{good}");
        assert!(bad > 1e-3, "{bad}");
    }
}

use num_complex::Complex64;

use crate::error::BasisError;
use crate::index::FamilyId;
use crate::special::{gen_binomial, laguerre_poly, ln_factorial, ln_gamma, Sum};

fn check_alpha(alpha: f64) -> Result<(), BasisError> {
    if alpha > -1.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(BasisError::InvalidAlpha(alpha))
    }
}

fn check_nonneg(name: &'static str, v: f64) -> Result<(), BasisError> {
    if v >= 0.0 {
        Ok(())
    } else {
        Err(BasisError::Domain {
            name,
            value: v,
            domain: "[0, inf)",
        })
    }
}

/// Laguerre function
/// `M_n^a(y) = sqrt(n!/Gamma(n+a+1)) y^{a/2} e^{-y/2} L_n^a(y)`.
pub fn laguerre_m(n: u32, alpha: f64, y: f64) -> Result<f64, BasisError> {
    check_alpha(alpha)?;
    check_nonneg("y", y)?;
    let poly = laguerre_poly(n, alpha, y);
    if poly == 0.0 {
        return Ok(0.0);
    }
    let ln_norm = 0.5 * (ln_gamma(n as f64 + 1.0) - ln_gamma(n as f64 + alpha + 1.0));
    if y == 0.0 {
        return Ok(if alpha == 0.0 {
            poly * ln_norm.exp()
        } else if alpha > 0.0 {
            0.0
        } else {
            poly.signum() * f64::INFINITY
        });
    }
    let ln_pref = ln_norm + 0.5 * alpha * y.ln() - 0.5 * y;
    Ok(poly.signum() * (poly.abs().ln() + ln_pref).exp())
}

/// Associated Laguerre function on the half-line for doubled `(2j, 2m)`.
/// For `m <= 0` this is `M_{j+m}^{-2m}(x)`, which is the defining formula
/// with non-negative Laguerre order; `m > 0` goes through the reflection
/// `L_j^m = (-1)^{2j} L_j^{-m}`.
pub fn assoc_laguerre(two_j: i64, two_m: i64, x: f64) -> Result<f64, BasisError> {
    FamilyId::AssocLaguerre.validate(&[two_j, two_m])?;
    check_nonneg("x", x)?;
    let k2 = two_m.abs();
    let n = ((two_j - k2) / 2) as u32;
    let v = laguerre_m(n, k2 as f64, x)?;
    if two_m > 0 && two_j % 2 != 0 {
        Ok(-v)
    } else {
        Ok(v)
    }
}

/// The defining formula read literally for any sign of `m`:
/// `sqrt((j+m)!/(j-m)!) x^{-m} e^{-x/2} L_{j+m}^{(-2m)}(x)` with the
/// Laguerre polynomial expanded through generalized binomials. Used only to
/// cross-check the reflection route at moderate `x > 0`.
pub fn assoc_laguerre_literal(two_j: i64, two_m: i64, x: f64) -> Result<f64, BasisError> {
    FamilyId::AssocLaguerre.validate(&[two_j, two_m])?;
    if !(x > 0.0) {
        return Err(BasisError::Domain {
            name: "x",
            value: x,
            domain: "(0, inf)",
        });
    }
    let jpm = ((two_j + two_m) / 2) as u64;
    let jmm = ((two_j - two_m) / 2) as u64;
    let order = -(two_m as f64);
    let n = jpm as u32;
    let mut acc = Sum::new();
    let mut xk_over_kfact = 1.0;
    for k in 0..=n {
        if k > 0 {
            xk_over_kfact *= x / k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * gen_binomial(n as f64 + order, n - k) * xk_over_kfact);
    }
    let ln_pref = 0.5 * (ln_factorial(jpm) - ln_factorial(jmm)) - 0.5 * (two_m as f64) * x.ln() - 0.5 * x;
    Ok(acc.value() * ln_pref.exp())
}

/// Plane function `Z_j^m(r, phi) = e^{i m phi} L_j^m(r^2)`.
pub fn plane_z(two_j: i64, two_m: i64, r: f64, phi: f64) -> Result<Complex64, BasisError> {
    check_nonneg("r", r)?;
    let radial = assoc_laguerre(two_j, two_m, r * r)?;
    Ok(Complex64::from_polar(1.0, 0.5 * two_m as f64 * phi) * radial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn reference_values() {
        let y: f64 = 1.7;
        let a = 1.5;
        let want = y.powf(a / 2.0) * (-y / 2.0).exp() / ln_gamma(a + 1.0).exp().sqrt();
        assert!((laguerre_m(0, a, y).unwrap() - want).abs() < 1e-15);
        assert_eq!(laguerre_m(1, 0.0, 0.0).unwrap(), 1.0);
        assert_eq!(laguerre_m(3, 0.5, 0.0).unwrap(), 0.0);
        assert!(laguerre_m(1, 0.0, -1.0).is_err());
        assert!(laguerre_m(1, -1.0, 1.0).is_err());
    }

    #[test]
    fn assoc_ground_state_and_reflection() {
        for &x in &[0.0, 0.3, 2.0, 9.0] {
            assert!((assoc_laguerre(0, 0, x).unwrap() - (-x / 2.0f64).exp()).abs() < 1e-15);
            assert_eq!(assoc_laguerre(2, 2, x).unwrap(), assoc_laguerre(2, -2, x).unwrap());
            assert_eq!(assoc_laguerre(3, 1, x).unwrap(), -assoc_laguerre(3, -1, x).unwrap());
        }
    }

    #[test]
    fn reflection_route_matches_literal_formula() {
        for two_j in 0..=10i64 {
            for two_m in (-two_j..=two_j).step_by(2) {
                for &x in &[0.2, 1.1, 3.5, 7.0] {
                    let a = assoc_laguerre(two_j, two_m, x).unwrap();
                    let b = assoc_laguerre_literal(two_j, two_m, x).unwrap();
                    assert!((a - b).abs() < 1e-11, "2j={two_j} 2m={two_m} x={x}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn plane_quasi_periodicity() {
        let (r, phi) = (0.8, 0.4);
        for (two_j, two_m) in [(1i64, 1i64), (1, -1), (3, 1), (2, 0), (4, -2)] {
            let a = plane_z(two_j, two_m, r, phi + 2.0 * PI).unwrap();
            let b = plane_z(two_j, two_m, r, phi).unwrap();
            let sign = if two_j % 2 == 0 { 1.0 } else { -1.0 };
            assert!((a - sign * b).norm() < 1e-14);
        }
    }
}

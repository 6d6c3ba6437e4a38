use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::BasisError;
use crate::index::FamilyId;

fn check_radius(r: f64) -> Result<(), BasisError> {
    if (0.0..=1.0).contains(&r) {
        Ok(())
    } else {
        Err(BasisError::Domain {
            name: "r",
            value: r,
            domain: "[0, 1]",
        })
    }
}

/// Zernike radial polynomial
/// `R_n^m(r) = (-1)^k r^|m| P_k^{(|m|, 0)}(1 - 2 r^2)` with `k = (n - |m|)/2`,
/// the Jacobi factor by its three-term recurrence, which is stable on
/// `[-1, 1]`.
pub fn zernike_r(n: i64, m: i64, r: f64) -> Result<f64, BasisError> {
    FamilyId::ZernikeR.validate(&[n, m])?;
    check_radius(r)?;
    let a = m.abs() as f64;
    let k = (n - m.abs()) / 2;
    let x = 1.0 - 2.0 * r * r;
    let mut prev = 1.0;
    let mut cur = if k == 0 { 1.0 } else { (a + 1.0) + 0.5 * (a + 2.0) * (x - 1.0) };
    for i in 2..=k {
        let i = i as f64;
        let c = 2.0 * i + a;
        let next = ((c - 1.0) * (c * (c - 2.0) * x + a * a) * cur - 2.0 * (i + a - 1.0) * (i - 1.0) * c * prev)
            / (2.0 * i * (i + a) * (c - 2.0));
        prev = cur;
        cur = next;
    }
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * r.powi(m.abs() as i32) * cur)
}

/// W-Zernike disk function
/// `W_{u,v}(r, phi) = sqrt((u+v+1)/pi) R_{u+v}^{|u-v|}(r) e^{i (u-v) phi}`.
pub fn zernike_w(u: i64, v: i64, r: f64, phi: f64) -> Result<Complex64, BasisError> {
    FamilyId::ZernikeW.validate(&[u, v])?;
    let radial = zernike_r(u + v, (u - v).abs(), r)?;
    let scale = ((u + v + 1) as f64 / PI).sqrt();
    Ok(Complex64::from_polar(1.0, (u - v) as f64 * phi) * (scale * radial))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        for &r in &[0.0, 0.3, 0.77, 1.0] {
            assert!((zernike_r(2, 0, r).unwrap() - (2.0 * r * r - 1.0)).abs() < 1e-15);
            assert!((zernike_w(0, 0, r, 1.0).unwrap() - 1.0 / PI.sqrt()).norm() < 1e-15);
        }
        for n in 0..=16i64 {
            for m in (-n..=n).filter(|m| (n - m.abs()) % 2 == 0) {
                assert!((zernike_r(n, m, 1.0).unwrap() - 1.0).abs() < 1e-12);
            }
        }
        assert!(zernike_r(3, 0, 0.5).is_err());
        assert!(zernike_r(2, 0, 1.5).is_err());
    }

    #[test]
    fn unit_radius_through_the_wide_integer_threshold() {
        for n in [30i64, 32, 34] {
            for m in [0i64, 2, 10] {
                let v = zernike_r(n, m, 1.0).unwrap();
                assert!((v - 1.0).abs() < 1e-6, "{n} {m} {v}");
            }
        }
    }
}

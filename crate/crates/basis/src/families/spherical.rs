use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::BasisError;
use crate::index::FamilyId;
use crate::special::legendre_normalized_column;

/// Spherical harmonic
/// `Y_l^m = sqrt((l-m)!/(2 pi (l+m)!)) e^{i m phi} P_l^m(cos theta)`,
/// where `P_l^m` carries `(-1)^m` and no further phase is applied.
pub fn sph_harm(l: i64, m: i64, theta: f64, phi: f64) -> Result<Complex64, BasisError> {
    FamilyId::SphericalY.validate(&[l, m])?;
    if !(0.0..=PI).contains(&theta) {
        return Err(BasisError::Domain {
            name: "theta",
            value: theta,
            domain: "[0, pi]",
        });
    }
    let k = m.unsigned_abs() as u32;
    let col = legendre_normalized_column(k, l as u32, theta.cos(), theta.sin());
    let mut p = *col.last().expect("non-empty");
    if m < 0 && k % 2 == 1 {
        p = -p;
    }
    Ok(Complex64::from_polar(p / (2.0 * PI).sqrt(), m as f64 * phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let c = 1.0 / (2.0 * PI).sqrt();
        let (t, f) = (0.7, 2.1);
        assert!((sph_harm(0, 0, t, f).unwrap() - c).norm() < 1e-15);
        assert!((sph_harm(1, 0, t, f).unwrap() - c * t.cos()).norm() < 1e-15);
        assert_eq!(
            sph_harm(1, 2, t, f).unwrap_err().to_string(),
            "invalid index for sph-y: |m| <= l violated"
        );
    }

    #[test]
    fn negative_order_is_conjugate_reflection() {
        let (t, f) = (1.1, 0.3);
        for l in 0..8i64 {
            for m in 0..=l {
                let a = sph_harm(l, -m, t, f).unwrap();
                let b = sph_harm(l, m, t, f).unwrap().conj();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                assert!((a - sign * b).norm() < 1e-14);
            }
        }
    }
}

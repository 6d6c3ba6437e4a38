use num_complex::Complex64;

use crate::error::BasisError;
use crate::index::FamilyId;
use crate::special::{binomial_product, ln_factorial, Sum};

/// Largest supported polynomial degree `j - m`.
pub const MAX_DEGREE: i64 = 50;

/// Algebraic Jacobi function `J_j^{m,q}(x)` for doubled `(2j, 2m, 2q)`.
///
/// The Jacobi factor `J_{j-m}^{(m+q, m-q)}` is expanded by its finite
/// binomial sum. Because `j+q` and `j-q` are non-negative integers, every
/// nonzero term carries non-negative powers of `(1-x)/2` and `(1+x)/2` once
/// the prefactor is folded in, so negative Jacobi parameters never produce
/// a `0 * inf` near the endpoints.
pub fn algebraic_jacobi(two_j: i64, two_m: i64, two_q: i64, x: f64) -> Result<f64, BasisError> {
    FamilyId::JacobiJ.validate(&[two_j, two_m, two_q])?;
    if !(-1.0..=1.0).contains(&x) {
        return Err(BasisError::Domain {
            name: "x",
            value: x,
            domain: "[-1, 1]",
        });
    }
    let n = (two_j - two_m) / 2;
    if n > MAX_DEGREE {
        return Err(BasisError::Unsupported {
            degree: n,
            max: MAX_DEGREE,
        });
    }
    let jpq = (two_j + two_q) / 2;
    let jmq = (two_j - two_q) / 2;
    let mpq = (two_m + two_q) / 2;
    let mmq = (two_m - two_q) / 2;
    let su = (0.5 * (1.0 - x)).sqrt();
    let sw = (0.5 * (1.0 + x)).sqrt();
    let mut acc = Sum::new();
    for s in (n - jmq).max(0)..=n.min(jpq) {
        let du = mpq + 2 * (n - s);
        let dw = mmq + 2 * s;
        debug_assert!(du >= 0 && dw >= 0);
        let c = binomial_product(jpq as u64, s as u64, jmq as u64, (n - s) as u64);
        let sign = if (n - s) % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * c * su.powi(du as i32) * sw.powi(dw as i32));
    }
    let jpm = ((two_j + two_m) / 2) as u64;
    let jmm = ((two_j - two_m) / 2) as u64;
    let ln_pref = 0.5
        * (ln_factorial(jpm) + ln_factorial(jmm) - ln_factorial(jpq as u64) - ln_factorial(jmq as u64));
    Ok(acc.value() * ln_pref.exp())
}

/// Hypersphere function
/// `N_j^{m,q}(x, phi, chi) = sqrt(j + 1/2) J_j^{m,q}(x) e^{i m phi} e^{i q chi}`.
pub fn hypersphere(
    two_j: i64,
    two_m: i64,
    two_q: i64,
    x: f64,
    phi: f64,
    chi: f64,
) -> Result<Complex64, BasisError> {
    let v = algebraic_jacobi(two_j, two_m, two_q, x)?;
    let scale = (0.5 * two_j as f64 + 0.5).sqrt();
    let phase = 0.5 * (two_m as f64 * phi + two_q as f64 * chi);
    Ok(Complex64::from_polar(scale * v, phase))
}

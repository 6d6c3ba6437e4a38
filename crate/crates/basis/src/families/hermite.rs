use std::f64::consts::PI;

/// Hermite functions `psi_0..=psi_nmax` at `x` by the normalized recurrence
/// `psi_{k+1} = sqrt(2/(k+1)) x psi_k - sqrt(k/(k+1)) psi_{k-1}`.
pub fn hermite_all(nmax: u32, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(nmax as usize + 1);
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * x * x).exp();
    out.push(cur);
    for k in 0..nmax {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Hermite function `psi_n(x)`; underflows to 0 for large `|x|`.
pub fn hermite(n: u32, x: f64) -> f64 {
    *hermite_all(n, x).last().expect("non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::ln_factorial;

    /// `H_n(x)` from its explicit integer coefficients.
    fn physicists_hermite(n: u32, x: f64) -> f64 {
        let mut acc = 0.0;
        for k in 0..=n / 2 {
            let c = (ln_factorial(n as u64) - ln_factorial(k as u64) - ln_factorial((n - 2 * k) as u64)).exp();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * c.round() * (2.0 * x).powi((n - 2 * k) as i32);
        }
        acc
    }

    #[test]
    fn reference_values() {
        assert!((hermite(0, 0.0) - 0.751_125_544_464_942_5).abs() < 1e-15);
        assert_eq!(hermite(1, 0.0), 0.0);
    }

    #[test]
    fn recurrence_matches_explicit_polynomials() {
        for n in 0..=10u32 {
            for &x in &[-2.1f64, -0.4, 0.0, 0.9, 1.3, 2.7] {
                let norm = (2f64.powi(n as i32) * ln_factorial(n as u64).exp() * PI.sqrt()).sqrt();
                let direct = (-0.5 * x * x).exp() * physicists_hermite(n, x) / norm;
                assert!((hermite(n, x) - direct).abs() < 1e-12, "n={n} x={x}");
            }
        }
    }
}

//! Scalar building blocks: factorial ratios, binomials, and the classical
//! polynomials in the forms used by the family evaluators.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
pub(crate) use sgsf_quadrature::CompensatedSum as Sum;

pub use statrs::function::gamma::ln_gamma;

/// `ln n!`.
pub fn ln_factorial(n: u64) -> f64 {
    statrs::function::factorial::ln_factorial(n)
}

/// Exact binomial coefficient; `None` once it leaves `u128`.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Exact binomial coefficient in arbitrary precision.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Exact product of two binomials rounded once to `f64`. Products that fit
/// in 64 bits use machine integers, all others arbitrary precision.
pub fn binomial_product(n1: u64, k1: u64, n2: u64, k2: u64) -> f64 {
    let small = binomial_u128(n1, k1)
        .zip(binomial_u128(n2, k2))
        .and_then(|(a, b)| a.checked_mul(b))
        .filter(|p| *p <= u64::MAX as u128);
    match small {
        Some(p) => p as f64,
        None => (binomial_big(n1, k1) * binomial_big(n2, k2))
            .to_f64()
            .unwrap_or(f64::INFINITY),
    }
}

/// Generalized binomial `a (a-1) ... (a-s+1) / s!` for real `a`.
pub fn gen_binomial(a: f64, s: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..s {
        acc *= (a - i as f64) / (i as f64 + 1.0);
    }
    acc
}

/// Generalized Laguerre polynomial `L_n^a(y)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+a+1-y) L_k - (k+a) L_{k-1}`.
pub fn laguerre_poly(n: u32, alpha: f64, y: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + alpha + 1.0 - y) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial by the explicit finite sum
/// `sum_s C(n+a, s) C(n+b, n-s) ((x+1)/2)^s ((x-1)/2)^(n-s)` with
/// generalized binomials, so negative `a`, `b` are allowed.
pub fn jacobi_poly(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let p = 0.5 * (x + 1.0);
    let q = 0.5 * (x - 1.0);
    let nf = n as f64;
    let mut acc = Sum::new();
    for s in 0..=n {
        let c = gen_binomial(nf + a, s) * gen_binomial(nf + b, n - s);
        acc.add(c * p.powi(s as i32) * q.powi((n - s) as i32));
    }
    acc.value()
}

/// Normalized associated Legendre values
/// `sqrt((l-m)!/(l+m)!) P_l^m` for `l = m..=lmax` and `m >= 0`, given
/// `x = cos(theta)` and `s = sin(theta) >= 0`. `P_l^m` carries the factor
/// `(-1)^m`.
pub fn legendre_normalized_column(m: u32, lmax: u32, x: f64, s: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity((lmax + 1).saturating_sub(m) as usize);
    if lmax < m {
        return out;
    }
    let mut pmm = 1.0;
    for k in 1..=m {
        let kf = k as f64;
        pmm *= -s * ((2.0 * kf - 1.0) / (2.0 * kf)).sqrt();
    }
    out.push(pmm);
    if lmax == m {
        return out;
    }
    let mf = m as f64;
    let mut prev = pmm;
    let mut cur = x * (2.0 * mf + 1.0).sqrt() * pmm;
    out.push(cur);
    for l in (m + 2)..=lmax {
        let lf = l as f64;
        let next = ((2.0 * lf - 1.0) * x * cur
            - ((lf - 1.0) * (lf - 1.0) - mf * mf).sqrt() * prev)
            / (lf * lf - mf * mf).sqrt();
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Associated Legendre function `P_l^m(x)` for `|m| <= l`, with
/// `P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m`.
pub fn assoc_legendre(l: u32, m: i32, x: f64) -> f64 {
    let k = m.unsigned_abs();
    assert!(k <= l, "|m| <= l");
    let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    let norm = *legendre_normalized_column(k, l, x, s).last().expect("non-empty");
    let ln_ratio = 0.5 * (ln_factorial((l + k) as u64) - ln_factorial((l - k) as u64));
    if m >= 0 {
        norm * ln_ratio.exp()
    } else {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * norm * (-ln_ratio).exp()
    }
}

//! Constants of the point-evaluation bounds, by partial summation.

use sgsf_basis::special::ln_gamma;
use sgsf_basis::FamilyId;
use sgsf_quadrature::CompensatedSum;
use std::f64::consts::PI;

use crate::error::RhsError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantReport {
    pub value: f64,
    /// Terms summed (index levels for multi-index families).
    pub terms: usize,
    /// Upper bound on the neglected tail of the squared sum.
    pub tail_bound: f64,
}

/// Second Cauchy-Schwarz factor `sqrt(sum_{j,m} 1 / ((|m|!)^2 ((j-|m|)!)^5))`
/// over `j <= two_j_max / 2` of one parity class, where `two_j_max` has the
/// parity of the class.
pub fn assoc_laguerre_constant(two_j_max: i64) -> f64 {
    let lf = |x: f64| ln_gamma(x + 1.0);
    let mut acc = CompensatedSum::new();
    for tj in (two_j_max.rem_euclid(2)..=two_j_max).step_by(2) {
        for tm in (-tj..=tj).step_by(2) {
            let j = tj as f64 / 2.0;
            let m = (tm as f64 / 2.0).abs();
            acc.add((-2.0 * lf(m) - 5.0 * lf(j - m)).exp());
        }
    }
    acc.value().sqrt()
}

/// `K = sqrt(sum_i bound_i^2 / w_i(p)^2)` for the point functionals:
///
/// * circle harmonics with `w = |m + i|^p`, `bound = 1`, `p >= 1`;
/// * associated Laguerre, integer `j`, the Lemma-type factor `C`, `p = 2`;
/// * W-Zernike with `w = (u+v+1)^p` and `bound^2 = (u+v+1)/pi`, `p >= 2`.
///
/// Summation stops once the tail bound drops below `tol`.
pub fn continuity_constant(family: FamilyId, p: u32, tol: f64) -> Result<ConstantReport, RhsError> {
    if !(tol > 0.0) {
        return Err(RhsError::InvalidParameter(format!("tolerance {tol}")));
    }
    match family {
        FamilyId::FourierCircle => {
            if p == 0 {
                return Err(RhsError::Divergent { family: family.tag(), p });
            }
            // tail of 2 sum_{m > M} (m^2+1)^{-p} <= 2 int_M^inf x^{-2p} dx
            let tail = |m: f64| 2.0 * m.powf(1.0 - 2.0 * p as f64) / (2.0 * p as f64 - 1.0);
            let mut acc = CompensatedSum::new();
            acc.add(1.0);
            let mut m = 0u64;
            loop {
                m += 1;
                let mf = m as f64;
                acc.add(2.0 * (mf * mf + 1.0).powi(-(p as i32)));
                if tail(mf) < tol {
                    return Ok(ConstantReport {
                        value: acc.value().sqrt(),
                        terms: 2 * m as usize + 1,
                        tail_bound: tail(mf),
                    });
                }
            }
        }
        FamilyId::AssocLaguerre | FamilyId::PlaneZ => {
            if p != 2 {
                return Err(RhsError::Unsupported {
                    family: family.tag(),
                    what: "a point-evaluation constant other than p = 2",
                });
            }
            let mut two_j = 0;
            let mut prev = assoc_laguerre_constant(0).powi(2);
            loop {
                two_j += 2;
                let cur = assoc_laguerre_constant(two_j).powi(2);
                // level sums shrink by more than half from j = 3 on, so the
                // last level bounds the rest
                let step = cur - prev;
                if step < tol {
                    return Ok(ConstantReport {
                        value: cur.sqrt(),
                        terms: (two_j / 2 + 1) as usize,
                        tail_bound: step,
                    });
                }
                prev = cur;
            }
        }
        FamilyId::ZernikeW => {
            if p < 2 {
                return Err(RhsError::Divergent { family: family.tag(), p });
            }
            // (n+1) pairs on level n, each with bound^2 / w^2 = (n+1)^{1-2p}/pi
            let e = 2.0 - 2.0 * p as f64;
            let tail = |n: f64| (n + 1.0).powf(e + 1.0) / ((-e - 1.0) * PI);
            let mut acc = CompensatedSum::new();
            let mut n = 0u64;
            loop {
                acc.add((n as f64 + 1.0).powf(e) / PI);
                if tail(n as f64) < tol {
                    return Ok(ConstantReport {
                        value: acc.value().sqrt(),
                        terms: n as usize + 1,
                        tail_bound: tail(n as f64),
                    });
                }
                n += 1;
            }
        }
        other => Err(RhsError::Unsupported {
            family: other.tag(),
            what: "a point-evaluation constant",
        }),
    }
}

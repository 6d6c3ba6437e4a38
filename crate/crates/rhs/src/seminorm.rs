//! Weighted coefficient seminorms. Every weight has the form `base(i)^p`
//! and is handled through `ln base`, so factorial weights never overflow
//! before the final value does.

use sgsf_algebra::CoeffVec;
use sgsf_basis::special::ln_gamma;
use sgsf_basis::FamilyId;
use std::f64::consts::LN_2;

use crate::error::RhsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `sqrt(sum |a_i|^2 w_i^2)`
    L2,
    /// `sum |a_i| w_i`
    L1,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightRule {
    /// `|m + i|`
    FourierShift,
    /// `2^{3|m|} (j + |m| + 1)!`
    FactorialGrowth,
    /// `j + |m| + 1`, or `l + |m| + 1` on the sphere
    DegreePlusOrder,
    /// `(n + 1)(n + alpha + shift)`
    LaguerreProduct { shift: f64 },
    /// `(j + |m| + 1)^p (j + |q| + 1)^s`, with `s` held fixed
    JacobiTwoParameter { s: u32 },
    /// `u + v + 1`
    ZernikeDegree,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeminormSpec {
    pub name: &'static str,
    pub family: FamilyId,
    pub flavor: Flavor,
    pub rule: WeightRule,
}

fn natural(family: FamilyId, idx: &[i64], k: usize) -> f64 {
    if family.doubled() {
        idx[k] as f64 / 2.0
    } else {
        idx[k] as f64
    }
}

impl SeminormSpec {
    pub const fn new(name: &'static str, family: FamilyId, flavor: Flavor, rule: WeightRule) -> Self {
        Self {
            name,
            family,
            flavor,
            rule,
        }
    }

    /// `ln w_i` at `p`. The `JacobiTwoParameter` factor in `q` is included
    /// for every `p`.
    pub fn ln_weight(&self, idx: &[i64], p: u32) -> f64 {
        let c = |k| natural(self.family, idx, k);
        let pf = p as f64;
        match self.rule {
            WeightRule::FourierShift => 0.5 * pf * (c(0) * c(0) + 1.0).ln(),
            WeightRule::FactorialGrowth => {
                let (j, m) = (c(0), c(1).abs());
                pf * (3.0 * m * LN_2 + ln_gamma(j + m + 2.0))
            }
            WeightRule::DegreePlusOrder => pf * (c(0) + c(1).abs() + 1.0).ln(),
            WeightRule::LaguerreProduct { shift } => {
                let alpha = self.family.alpha().unwrap_or(0.0);
                let n = c(0);
                pf * ((n + 1.0).ln() + (n + alpha + shift).ln())
            }
            WeightRule::JacobiTwoParameter { s } => {
                let j = c(0);
                pf * (j + c(1).abs() + 1.0).ln() + s as f64 * (j + c(2).abs() + 1.0).ln()
            }
            WeightRule::ZernikeDegree => pf * (c(0) + c(1) + 1.0).ln(),
        }
    }

    pub fn weight(&self, idx: &[i64], p: u32) -> Result<f64, RhsError> {
        let w = self.ln_weight(idx, p).exp();
        if w.is_finite() {
            Ok(w)
        } else {
            Err(RhsError::Overflow { spec: self.name, p })
        }
    }

    fn check(&self, v: &CoeffVec) -> Result<(), RhsError> {
        if v.family() != self.family {
            return Err(RhsError::FamilyMismatch {
                spec: self.name,
                expected: self.family.tag(),
                got: v.family().tag(),
            });
        }
        Ok(())
    }
}

/// `ln` of the seminorm; `-inf` for the zero vector. Never overflows.
pub fn ln_seminorm(v: &CoeffVec, spec: &SeminormSpec, p: u32) -> Result<f64, RhsError> {
    spec.check(v)?;
    let power = match spec.flavor {
        Flavor::L2 => 2.0,
        Flavor::L1 => 1.0,
    };
    let logs: Vec<f64> = v
        .iter()
        .map(|(idx, a)| power * (a.norm().ln() + spec.ln_weight(idx, p)))
        .collect();
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return Ok(top);
    }
    let scaled: sgsf_quadrature::CompensatedSum = logs.iter().map(|l| (l - top).exp()).collect();
    Ok((top + scaled.value().ln()) / power)
}

/// Seminorm value; `Overflow` when it leaves the double range.
pub fn seminorm(v: &CoeffVec, spec: &SeminormSpec, p: u32) -> Result<f64, RhsError> {
    let value = ln_seminorm(v, spec, p)?.exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(RhsError::Overflow { spec: spec.name, p })
    }
}

/// Every registered seminorm family; the Laguerre ones at `alpha`.
pub fn registry(alpha: f64) -> Vec<SeminormSpec> {
    use Flavor::*;
    use WeightRule::*;
    let lag = FamilyId::LaguerreM { alpha };
    vec![
        SeminormSpec::new("fourier", FamilyId::FourierCircle, L2, FourierShift),
        SeminormSpec::new("assoc-laguerre-factorial", FamilyId::AssocLaguerre, L2, FactorialGrowth),
        SeminormSpec::new("plane-factorial", FamilyId::PlaneZ, L2, FactorialGrowth),
        SeminormSpec::new("assoc-laguerre-linear", FamilyId::AssocLaguerre, L2, DegreePlusOrder),
        SeminormSpec::new("spherical", FamilyId::SphericalY, L2, DegreePlusOrder),
        SeminormSpec::new("laguerre", lag, L2, LaguerreProduct { shift: 2.0 }),
        SeminormSpec::new("laguerre-transported", lag, L2, LaguerreProduct { shift: 1.0 }),
        SeminormSpec::new("jacobi-p-s0", FamilyId::JacobiJ, L2, JacobiTwoParameter { s: 0 }),
        SeminormSpec::new("jacobi-p-s1", FamilyId::JacobiJ, L2, JacobiTwoParameter { s: 1 }),
        SeminormSpec::new("jacobi-t-s0", FamilyId::JacobiJ, L1, JacobiTwoParameter { s: 0 }),
        SeminormSpec::new("jacobi-t-s1", FamilyId::JacobiJ, L1, JacobiTwoParameter { s: 1 }),
        SeminormSpec::new("zernike-l2", FamilyId::ZernikeW, L2, ZernikeDegree),
        SeminormSpec::new("zernike-l1", FamilyId::ZernikeW, L1, ZernikeDegree),
    ]
}

/// Registered spec by name.
pub fn lookup(name: &str, alpha: f64) -> Result<SeminormSpec, RhsError> {
    registry(alpha)
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| RhsError::InvalidParameter(format!("unknown seminorm '{name}'")))
}

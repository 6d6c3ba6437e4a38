//! Randomized checks of operator continuity inequalities between seminorms.

use std::ops::RangeInclusive;

use sgsf_algebra::tables::{algebra, fourier_j, AlgebraId};
use sgsf_algebra::{GeneratorSpec, Mode, Window};
use sgsf_basis::FamilyId;

use crate::error::RhsError;
use crate::random::random_vector;
use crate::seminorm::{ln_seminorm, lookup, SeminormSpec};

/// Relative slack before a trial counts as a violation.
pub const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundShape {
    /// `||g v||_p <= ||v||_{p+1}`
    NextOrder,
    /// `||g v||_p <= (2^p + 1) ||v||_p`
    SameOrderPowerOfTwoPlusOne,
}

impl BoundShape {
    fn ln_constant(&self, p: u32) -> f64 {
        match self {
            BoundShape::NextOrder => 0.0,
            BoundShape::SameOrderPowerOfTwoPlusOne => (2f64.powi(p as i32) + 1.0).ln(),
        }
    }

    fn rhs_order(&self, p: u32) -> u32 {
        match self {
            BoundShape::NextOrder => p + 1,
            BoundShape::SameOrderPowerOfTwoPlusOne => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContinuityReport {
    pub label: String,
    pub trials: usize,
    /// Trials with a non-finite seminorm on either side.
    pub invalid: usize,
    /// `(trial, p)` pairs breaking the bound.
    pub violations: usize,
    /// Largest `lhs / (constant * rhs)` seen.
    pub max_ratio: f64,
    /// First violating `(trial, p)`.
    pub first_violation: Option<(u64, u32)>,
    pub seed: u64,
}

impl ContinuityReport {
    pub fn holds(&self) -> bool {
        self.violations == 0 && self.invalid == 0
    }
}

/// Checks `||g v||_p <= C ||v||_{p'}` on `trials` random vectors in `window`
/// for every `p` in `orders`. Comparison is done on log seminorms, so large
/// weights never overflow.
pub fn continuity_inequality_check(
    label: &str,
    g: &GeneratorSpec,
    spec: &SeminormSpec,
    shape: BoundShape,
    window: &Window,
    trials: usize,
    orders: RangeInclusive<u32>,
    seed: u64,
) -> Result<ContinuityReport, RhsError> {
    let mut report = ContinuityReport {
        label: label.to_string(),
        trials,
        invalid: 0,
        violations: 0,
        max_ratio: 0.0,
        first_violation: None,
        seed,
    };
    for trial in 0..trials as u64 {
        let (v, _) = random_vector(spec.family, window, seed, trial)?;
        let gv = g.apply(&v, Mode::Grow)?;
        let mut invalid = false;
        for p in orders.clone() {
            let lhs = ln_seminorm(&gv, spec, p)?;
            let rhs = ln_seminorm(&v, spec, shape.rhs_order(p))? + shape.ln_constant(p);
            if lhs.is_nan() || rhs.is_nan() || lhs == f64::INFINITY || rhs == f64::INFINITY {
                invalid = true;
                continue;
            }
            if lhs == f64::NEG_INFINITY {
                continue;
            }
            let ratio = (lhs - rhs).exp();
            report.max_ratio = report.max_ratio.max(ratio);
            if lhs - rhs > SLACK.ln_1p() {
                report.violations += 1;
                report.first_violation.get_or_insert((trial, p));
            }
        }
        report.invalid += invalid as usize;
    }
    Ok(report)
}

/// Whether a case reproduces an inequality that is true as stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// The stated inequality has counterexamples; the note says why.
    Violated(&'static str),
}

#[derive(Debug, Clone)]
pub struct ContinuityCase {
    pub label: String,
    pub generator: GeneratorSpec,
    pub spec: SeminormSpec,
    pub shape: BoundShape,
    pub window: Window,
    pub orders: RangeInclusive<u32>,
    pub expectation: Expectation,
}

impl ContinuityCase {
    pub fn run(&self, trials: usize, seed: u64) -> Result<ContinuityReport, RhsError> {
        continuity_inequality_check(
            &self.label,
            &self.generator,
            &self.spec,
            self.shape,
            &self.window,
            trials,
            self.orders.clone(),
            seed,
        )
    }
}

const RAISING_SHIFT: &str = "the raising shift moves the coefficient onto a larger weight that the next-order seminorm does not cover at low degree";

fn gen(id: AlgebraId, name: &str) -> GeneratorSpec {
    algebra(id).generator(name).expect("tabulated generator").clone()
}

/// Group tag of each case, used to map cases onto report criteria.
pub fn case_group(label: &str) -> &str {
    label.split('/').next().unwrap_or(label)
}

/// The registered continuity cases.
pub fn continuity_cases() -> Vec<ContinuityCase> {
    use BoundShape::*;
    use Expectation::*;
    let mut out = Vec::new();
    let mut push = |label: String, g: GeneratorSpec, spec: &str, alpha: f64, shape, window, orders, e| {
        out.push(ContinuityCase {
            label,
            generator: g,
            spec: lookup(spec, alpha).expect("registered seminorm"),
            shape,
            window,
            orders,
            expectation: e,
        })
    };
    push(
        "circle-J/fourier".into(),
        fourier_j(),
        "fourier",
        0.0,
        NextOrder,
        Window::standard(FamilyId::FourierCircle, 16),
        0..=4,
        Holds,
    );
    for spec in ["assoc-laguerre-factorial", "assoc-laguerre-linear"] {
        for name in ["J", "K3"] {
            push(
                format!("assoc-laguerre-diagonal/{name}/{spec}"),
                gen(AlgebraId::Su2AssocLaguerre, name),
                spec,
                0.0,
                NextOrder,
                Window::standard(FamilyId::AssocLaguerre, 12),
                0..=3,
                Holds,
            );
        }
    }
    for name in ["L", "M"] {
        push(
            format!("sphere-diagonal/{name}/spherical"),
            gen(AlgebraId::So32Spherical, name),
            "spherical",
            0.0,
            NextOrder,
            Window::standard(FamilyId::SphericalY, 10),
            0..=3,
            Holds,
        );
    }
    for alpha in [-0.5, 0.0, 1.0, 2.5] {
        let id = AlgebraId::Su11Laguerre { alpha };
        for spec in ["laguerre", "laguerre-transported"] {
            for name in ["K+", "K-", "K3"] {
                let e = if name == "K+" { Violated(RAISING_SHIFT) } else { Holds };
                push(
                    format!("laguerre-ladder/{name}/{spec}/alpha={alpha}"),
                    gen(id, name),
                    spec,
                    alpha,
                    NextOrder,
                    Window::standard(FamilyId::LaguerreM { alpha }, 30),
                    0..=3,
                    e,
                );
            }
        }
    }
    for spec in ["jacobi-p-s0", "jacobi-p-s1", "jacobi-t-s0", "jacobi-t-s1"] {
        for name in ["J", "M", "Q"] {
            push(
                format!("jacobi-diagonal/{name}/{spec}"),
                gen(AlgebraId::Su22Jacobi, name),
                spec,
                0.0,
                NextOrder,
                Window::standard(FamilyId::JacobiJ, 8),
                0..=3,
                Holds,
            );
        }
    }
    let disk = Window::standard(FamilyId::ZernikeW, 12);
    push(
        "disk-P/zernike-l1".into(),
        gen(AlgebraId::Su11xSu11Zernike, "P"),
        "zernike-l1",
        0.0,
        SameOrderPowerOfTwoPlusOne,
        disk.clone(),
        0..=4,
        Holds,
    );
    push(
        "disk-A+/zernike-l1".into(),
        gen(AlgebraId::Su11xSu11Zernike, "A+"),
        "zernike-l1",
        0.0,
        NextOrder,
        disk,
        0..=4,
        Violated("the amplitude u + 1 times (u + v + 2)^r exceeds (u + v + 1)^(r + 1) at u = v = 0"),
    );
    out
}

/// Result of comparing two seminorms on random vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct DominationReport {
    pub trials: usize,
    pub violations: usize,
    pub max_ratio: f64,
    pub seed: u64,
}

/// Checks `||v||_{small, p} <= ||v||_{large, p}` on random vectors.
pub fn domination_check(
    small: &SeminormSpec,
    large: &SeminormSpec,
    window: &Window,
    trials: usize,
    orders: RangeInclusive<u32>,
    seed: u64,
) -> Result<DominationReport, RhsError> {
    let mut report = DominationReport {
        trials,
        violations: 0,
        max_ratio: 0.0,
        seed,
    };
    for trial in 0..trials as u64 {
        let (v, _) = random_vector(small.family, window, seed, trial)?;
        for p in orders.clone() {
            let d = ln_seminorm(&v, small, p)? - ln_seminorm(&v, large, p)?;
            report.max_ratio = report.max_ratio.max(d.exp());
            if d > SLACK.ln_1p() {
                report.violations += 1;
            }
        }
    }
    Ok(report)
}

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use statrs::function::gamma::ln_gamma;
use thiserror::Error;

use crate::sum::{CompensatedSum, ComplexSum};

/// Family of a quadrature rule. The Laguerre weight is `y^alpha e^{-y}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleKind {
    Legendre,
    Laguerre { alpha: f64 },
    Hermite,
    Periodic,
}

impl RuleKind {
    pub fn tag(&self) -> &'static str {
        match self {
            RuleKind::Legendre => "legendre",
            RuleKind::Laguerre { .. } => "laguerre",
            RuleKind::Hermite => "hermite",
            RuleKind::Periodic => "periodic",
        }
    }
}

/// Integration domain of a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `[-1, 1]`
    Symmetric,
    /// `[0, inf)`
    HalfLine,
    /// the real line
    RealLine,
    /// `[0, 2 pi)`
    Circle,
    /// `[0, pi)`, period `pi`
    HalfCircle,
}

impl Domain {
    pub fn tag(&self) -> &'static str {
        match self {
            Domain::Symmetric => "[-1,1]",
            Domain::HalfLine => "[0,inf)",
            Domain::RealLine => "R",
            Domain::Circle => "[0,2pi)",
            Domain::HalfCircle => "[0,pi)",
        }
    }

    /// Length of a periodic domain.
    pub fn period(&self) -> Option<f64> {
        match self {
            Domain::Circle => Some(2.0 * PI),
            Domain::HalfCircle => Some(PI),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError {
    #[error("quadrature order must be at least 1")]
    ZeroOrder,
    #[error("laguerre alpha must exceed -1, got {0}")]
    InvalidAlpha(f64),
    #[error("{kind} rule has no domain {domain}")]
    InvalidDomain { kind: &'static str, domain: &'static str },
    #[error("node iteration for {kind} rule of order {order} did not converge near x = {x}")]
    NoConvergence { kind: &'static str, order: usize, x: f64 },
    #[error("integrand is not finite at node {index} (x = {x})")]
    NonFinite { index: usize, x: f64 },
}

/// Immutable quadrature rule. Gauss rules integrate `p(x) w(x)` exactly for
/// polynomials `p` of degree at most `2 order - 1`, where `w` is the weight
/// of the kind.
#[derive(Debug, Clone)]
pub struct QuadRule {
    kind: RuleKind,
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    log_weights: Vec<f64>,
    domain: Domain,
}

/// Builds a rule. `interval` only applies to periodic rules and defaults to
/// `[0, 2 pi)`.
pub fn build_rule(
    kind: RuleKind,
    order: usize,
    interval: Option<Domain>,
) -> Result<QuadRule, QuadError> {
    if order == 0 {
        return Err(QuadError::ZeroOrder);
    }
    if let RuleKind::Laguerre { alpha } = kind {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(QuadError::InvalidAlpha(alpha));
        }
    }
    let natural = match kind {
        RuleKind::Legendre => Domain::Symmetric,
        RuleKind::Laguerre { .. } => Domain::HalfLine,
        RuleKind::Hermite => Domain::RealLine,
        RuleKind::Periodic => Domain::Circle,
    };
    let domain = interval.unwrap_or(natural);
    let valid = match kind {
        RuleKind::Periodic => domain.period().is_some(),
        _ => domain == natural,
    };
    if !valid {
        return Err(QuadError::InvalidDomain {
            kind: kind.tag(),
            domain: domain.tag(),
        });
    }
    if kind == RuleKind::Periodic {
        return Ok(periodic(order, domain));
    }
    gauss(kind, order, domain)
}

fn periodic(order: usize, domain: Domain) -> QuadRule {
    let len = domain.period().expect("periodic domain");
    let h = len / order as f64;
    QuadRule {
        kind: RuleKind::Periodic,
        order,
        nodes: (0..order).map(|k| k as f64 * h).collect(),
        weights: vec![h; order],
        log_weights: vec![h.ln(); order],
        domain,
    }
}

/// Monic recurrence coefficients `(a_k, b_k)` with
/// `x p_k = p_{k+1} + a_k p_k + b_k p_{k-1}`.
fn recurrence(kind: RuleKind, k: usize) -> (f64, f64) {
    let kf = k as f64;
    match kind {
        RuleKind::Legendre => (0.0, if k == 0 { 0.0 } else { kf * kf / (4.0 * kf * kf - 1.0) }),
        RuleKind::Hermite => (0.0, kf / 2.0),
        RuleKind::Laguerre { alpha } => (2.0 * kf + alpha + 1.0, kf * (kf + alpha)),
        RuleKind::Periodic => unreachable!("periodic rules have no recurrence"),
    }
}

fn ln_mu0(kind: RuleKind) -> f64 {
    match kind {
        RuleKind::Legendre => 2f64.ln(),
        RuleKind::Hermite => 0.5 * PI.ln(),
        RuleKind::Laguerre { alpha } => ln_gamma(alpha + 1.0),
        RuleKind::Periodic => unreachable!(),
    }
}

struct OrthoEval {
    p: f64,
    dp: f64,
    /// `ln sum_{k<n} p_k(x)^2`
    ln_sum_sq: f64,
}

const RESCALE_AT: f64 = 1e100;

/// Evaluates the orthonormal polynomial `p_n`, its derivative and the
/// Christoffel sum, rescaling on the fly so that large nodes cannot overflow.
/// `p` and `dp` are returned with a common positive scale removed; only their
/// ratio is meaningful.
fn ortho_eval(kind: RuleKind, n: usize, x: f64) -> OrthoEval {
    let mut p_prev = 0.0;
    let mut p = (-0.5 * ln_mu0(kind)).exp();
    let mut dp_prev = 0.0;
    let mut dp = 0.0;
    let mut sum = CompensatedSum::new();
    sum.add(p * p);
    let mut ln_scale = 0.0;
    for k in 0..n {
        let (a, b) = recurrence(kind, k);
        let (_, b_next) = recurrence(kind, k + 1);
        let sb = b.sqrt();
        let sb_next = b_next.sqrt();
        let p_next = ((x - a) * p - sb * p_prev) / sb_next;
        let dp_next = (p + (x - a) * dp - sb * dp_prev) / sb_next;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
        if k + 1 < n {
            sum.add(p * p);
        }
        if p.abs() > RESCALE_AT || dp.abs() > RESCALE_AT {
            let s = 1.0 / RESCALE_AT;
            p *= s;
            p_prev *= s;
            dp *= s;
            dp_prev *= s;
            let carried = sum.value() * s * s;
            sum = CompensatedSum::new();
            sum.add(carried);
            ln_scale += RESCALE_AT.ln();
        }
    }
    OrthoEval {
        p,
        dp,
        ln_sum_sq: sum.value().ln() + 2.0 * ln_scale,
    }
}

fn gauss(kind: RuleKind, order: usize, domain: Domain) -> Result<QuadRule, QuadError> {
    let n = order;
    let mut jac = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let (a, _) = recurrence(kind, k);
        jac[(k, k)] = a;
        if k + 1 < n {
            let (_, b) = recurrence(kind, k + 1);
            jac[(k, k + 1)] = b.sqrt();
            jac[(k + 1, k)] = b.sqrt();
        }
    }
    let mut guesses: Vec<f64> = SymmetricEigen::new(jac).eigenvalues.iter().copied().collect();
    guesses.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));

    let mut nodes = Vec::with_capacity(n);
    for &x0 in &guesses {
        nodes.push(polish(kind, n, x0)?);
    }
    if matches!(kind, RuleKind::Legendre | RuleKind::Hermite) {
        for i in 0..n / 2 {
            let v = 0.5 * (nodes[n - 1 - i] - nodes[i]);
            nodes[i] = -v;
            nodes[n - 1 - i] = v;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
    }
    let mut log_weights: Vec<f64> = nodes
        .iter()
        .map(|&x| -ortho_eval(kind, n, x).ln_sum_sq)
        .collect();
    if matches!(kind, RuleKind::Legendre | RuleKind::Hermite) {
        for i in 0..n / 2 {
            let v = 0.5 * (log_weights[i] + log_weights[n - 1 - i]);
            log_weights[i] = v;
            log_weights[n - 1 - i] = v;
        }
    }
    let weights = log_weights.iter().map(|lw| lw.exp()).collect();
    Ok(QuadRule {
        kind,
        order,
        nodes,
        weights,
        log_weights,
        domain,
    })
}

fn polish(kind: RuleKind, n: usize, x0: f64) -> Result<f64, QuadError> {
    let mut x = x0;
    let mut last_step = f64::INFINITY;
    for _ in 0..60 {
        let e = ortho_eval(kind, n, x);
        if e.dp == 0.0 || !e.dp.is_finite() {
            break;
        }
        let step = e.p / e.dp;
        x -= step;
        last_step = step.abs();
        if last_step <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            return Ok(x);
        }
    }
    if last_step <= 1e-10 * x.abs().max(1.0) {
        Ok(x)
    } else {
        Err(QuadError::NoConvergence {
            kind: kind.tag(),
            order: n,
            x: x0,
        })
    }
}

impl QuadRule {
    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alpha(&self) -> Option<f64> {
        match self.kind {
            RuleKind::Laguerre { alpha } => Some(alpha),
            _ => None,
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Natural logs of the weights. Weights of Laguerre rules above order
    /// ~200 underflow in double precision; their logs stay finite.
    pub fn log_weights(&self) -> &[f64] {
        &self.log_weights
    }

    /// Weights against plain Lebesgue measure: `w_i / w(x_i)`, formed in log
    /// space. Integrands that already carry the rule weight become exact
    /// polynomial sums under these weights.
    pub fn measure_weights(&self) -> Vec<f64> {
        self.nodes
            .iter()
            .zip(&self.log_weights)
            .map(|(&x, &lw)| match self.kind {
                RuleKind::Hermite => (lw + x * x).exp(),
                RuleKind::Laguerre { alpha } => (lw + x - alpha * x.ln()).exp(),
                _ => lw.exp(),
            })
            .collect()
    }

    /// Nodes and weights of a Legendre rule transplanted to `[a, b]`.
    pub fn affine(&self, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
        assert_eq!(self.kind, RuleKind::Legendre, "affine map needs a legendre rule");
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        (
            self.nodes.iter().map(|x| c + h * x).collect(),
            self.weights.iter().map(|w| h * w).collect(),
        )
    }

    /// Weighted node sum with compensated summation. The integrand excludes
    /// the rule weight.
    pub fn integrate<F>(&self, f: F) -> Result<Complex64, QuadError>
    where
        F: Fn(f64) -> Complex64,
    {
        let mut acc = ComplexSum::new();
        for (i, (&x, &w)) in self.nodes.iter().zip(&self.weights).enumerate() {
            let v = f(x);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(QuadError::NonFinite { index: i, x });
            }
            acc.add(v * w);
        }
        Ok(acc.value())
    }

    /// Real-valued convenience form of [`QuadRule::integrate`].
    pub fn integrate_real<F>(&self, f: F) -> Result<f64, QuadError>
    where
        F: Fn(f64) -> f64,
    {
        self.integrate(|x| Complex64::new(f(x), 0.0)).map(|z| z.re)
    }
}

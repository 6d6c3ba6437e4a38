//! Orthonormality, transform, Fourier-eigenrelation and cross-family suites.

use std::f64::consts::PI;

use num_complex::Complex64;
use sgsf_algebra::{CoeffVec, Window};
use sgsf_basis::FamilyId;
use sgsf_rhs::random::random_vector;
use sgsf_transforms::{
    cross_family_residual, ft_order_sweep, gram_residual, hypersphere_orthogonality, kernel_projection_residual,
    momentum_grid, ortho_classes, parseval_residual, probe_points, relation_points, rotate_circle,
    rotation_covariance_residual, round_trip_residual, CrossRelation, QuadPlan, TransformError, ZernikeReading,
};

use super::{tolerance, Item, Task, TOL_ALGEBRA, TOL_FINITE_DIFFERENCE, TOL_QUADRATURE};
use crate::config::{parse_window, window_label, SuiteConfig};
use crate::error::VerifyError;
use crate::report::{Check, Observation};

pub const LAGUERRE_ALPHAS: [f64; 4] = [-0.5, 0.0, 1.0, 2.5];

/// A family with a window and (optionally) fixed plan orders.
#[derive(Debug, Clone)]
pub struct FamilyCase {
    pub family: FamilyId,
    pub window: Window,
    pub window_text: String,
    pub orders: Option<Vec<usize>>,
}

impl FamilyCase {
    pub fn label(&self) -> String {
        match self.family.alpha() {
            Some(a) => format!("{}[alpha={a}]/{}", self.family.tag(), self.window_text),
            None => format!("{}/{}", self.family.tag(), self.window_text),
        }
    }

    pub fn plan(&self) -> Result<QuadPlan, TransformError> {
        match &self.orders {
            Some(o) => QuadPlan::new(self.family, o),
            None => QuadPlan::for_window(self.family, &self.window),
        }
    }
}

fn default_max(family: FamilyId) -> (i64, Option<usize>) {
    match family {
        FamilyId::FourierCircle => (16, None),
        FamilyId::Hermite | FamilyId::LaguerreM { .. } => (32, Some(80)),
        FamilyId::AssocLaguerre => (16, None),
        FamilyId::PlaneZ => (12, None),
        FamilyId::SphericalY => (16, None),
        FamilyId::JacobiJ => (16, None),
        FamilyId::HypersphereN => (6, None),
        FamilyId::ZernikeR => (16, None),
        FamilyId::ZernikeW => (16, None),
    }
}

/// Families selected by the config, each with its window and plan orders.
pub fn family_cases(cfg: &SuiteConfig) -> Result<Vec<FamilyCase>, VerifyError> {
    let families: Vec<FamilyId> = match &cfg.family {
        Some(tag) if tag == "laguerre-m" && cfg.alpha.is_none() => {
            LAGUERRE_ALPHAS.iter().map(|&alpha| FamilyId::LaguerreM { alpha }).collect()
        }
        Some(tag) => vec![FamilyId::from_tag(tag, cfg.alpha)?],
        None => {
            let mut v = vec![FamilyId::FourierCircle, FamilyId::Hermite];
            v.extend(LAGUERRE_ALPHAS.iter().map(|&alpha| FamilyId::LaguerreM { alpha }));
            v.extend([
                FamilyId::AssocLaguerre,
                FamilyId::PlaneZ,
                FamilyId::SphericalY,
                FamilyId::JacobiJ,
                FamilyId::HypersphereN,
                FamilyId::ZernikeR,
                FamilyId::ZernikeW,
            ]);
            v
        }
    };
    families
        .into_iter()
        .map(|family| {
            let (max, fixed) = default_max(family);
            let (window, window_text) = match &cfg.window {
                Some(text) => (parse_window(family, text)?, text.chars().filter(|c| !c.is_whitespace()).collect()),
                None => (Window::standard(family, max), window_label(family, max)),
            };
            let dim = family.dimension();
            let orders = match cfg.quad_order {
                Some(n) => Some(vec![n; dim]),
                None => fixed.map(|n| vec![n; dim]),
            };
            Ok(FamilyCase {
                family,
                window,
                window_text,
                orders,
            })
        })
        .collect()
}

fn warn_reason(warnings: &[String]) -> Option<String> {
    (!warnings.is_empty()).then(|| warnings.join("; "))
}

pub(crate) fn orthonormality(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let tol = tolerance(cfg, TOL_QUADRATURE);
    Ok(family_cases(cfg)?
        .into_iter()
        .map(|case| {
            Box::new(move || {
                let name = format!("orthonormality/{}", case.label());
                let r = case
                    .plan()
                    .and_then(|plan| gram_residual(case.family, &case.window, &plan));
                vec![Item::Check(match r {
                    Ok(g) => {
                        let mut c = Check::new(name, g.residual, tol).with_count(g.functions);
                        c.reason = warn_reason(&g.warnings);
                        c
                    }
                    Err(e) => Check::error(name, tol, e.to_string()),
                })]
            }) as Task
        })
        .collect())
}

/// Unit-norm random vector supported on one orthogonality class.
fn class_vector(
    family: FamilyId,
    window: &Window,
    class: &[Vec<i64>],
    seed: u64,
    trial: u64,
) -> Result<CoeffVec, VerifyError> {
    let (v, _) = random_vector(family, window, seed, trial)?;
    let entries: Vec<(Vec<i64>, Complex64)> = class.iter().map(|i| (i.clone(), v.get(i))).collect();
    let norm = entries.iter().map(|(_, a)| a.norm_sqr()).sum::<f64>().sqrt();
    let scaled = entries.into_iter().map(|(i, a)| (i, a / norm));
    Ok(CoeffVec::from_entries(family, window.clone(), scaled.collect::<Vec<_>>())?)
}

const ROTATIONS: [f64; 4] = [0.3, -1.7, PI, 5.5];
const KERNEL_PROBES: usize = 12;

fn transform_checks(case: &FamilyCase, seed: u64, tol: Option<f64>) -> Result<Vec<Item>, VerifyError> {
    let t = |d: f64| tol.unwrap_or(d);
    let plan = case.plan()?;
    let classes = ortho_classes(case.family, &case.window);
    let probes = probe_points(case.family, KERNEL_PROBES);
    let (mut round, mut parseval, mut kernel) = (0f64, 0f64, 0f64);
    let mut functions = 0;
    for (k, class) in classes.iter().enumerate() {
        let v = class_vector(case.family, &case.window, class, seed, k as u64)?;
        round = round.max(round_trip_residual(&v, class, &plan)?);
        parseval = parseval.max(parseval_residual(&v, &plan)?);
        kernel = kernel.max(kernel_projection_residual(&v, class, &plan, &probes)?);
        functions += class.len();
    }
    let base = format!("transforms/{}", case.label());
    let reason = warn_reason(&plan.warnings(&case.window));
    let mut out = Vec::new();
    for (what, r, d) in [
        ("round-trip", round, TOL_QUADRATURE),
        ("parseval", parseval, 1e-9),
        ("kernel-projection", kernel, TOL_QUADRATURE),
    ] {
        let mut c = Check::new(format!("{base}/{what}"), r, t(d)).with_count(functions);
        c.reason = reason.clone();
        out.push(Item::Check(c));
    }
    if case.family == FamilyId::FourierCircle {
        let v = class_vector(case.family, &case.window, &case.window.indices(case.family), seed, 0)?;
        let angles: Vec<f64> = probe_points(case.family, 64).into_iter().map(|p| p[0]).collect();
        let (mut cov, mut unit, mut group) = (0f64, 0f64, 0f64);
        for theta in ROTATIONS {
            cov = cov.max(rotation_covariance_residual(&v, theta, &angles)?);
            let r = rotate_circle(&v, theta)?;
            unit = unit.max((r.norm() - v.norm()).abs());
            let twice = rotate_circle(&rotate_circle(&v, theta)?, 0.5 * theta)?;
            group = group.max(twice.max_abs_diff(&rotate_circle(&v, 1.5 * theta)?));
        }
        out.push(Item::Check(Check::new(format!("{base}/rotation-covariance"), cov, t(TOL_QUADRATURE)).with_count(angles.len())));
        out.push(Item::Check(Check::new(format!("{base}/rotation-unitarity"), unit, t(TOL_ALGEBRA))));
        out.push(Item::Check(Check::new(format!("{base}/rotation-group-law"), group, t(TOL_ALGEBRA))));
    }
    if case.family == FamilyId::HypersphereN {
        for obs in hypersphere_orthogonality(&case.window, &plan)? {
            let p = obs.two_j_parity;
            out.push(Item::Check(
                Check::new(format!("{base}/even-q-difference[2j-parity={p}]"), obs.even_residual, t(TOL_QUADRATURE))
                    .with_count(obs.functions),
            ));
            let note = match &obs.worst_odd {
                Some((a, b)) => format!("max |<N_a, N_b>| over odd q - q' pairs, attained at {a:?}, {b:?}"),
                None => "no odd q - q' pairs in the window".to_string(),
            };
            out.push(Item::Observation(Observation::new(
                format!("{base}/odd-q-difference[2j-parity={p}]"),
                obs.odd_residual,
                note,
            )));
        }
    }
    Ok(out)
}

pub(crate) fn transforms(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let (seed, tol) = (cfg.seed, cfg.tol);
    Ok(family_cases(cfg)?
        .into_iter()
        .map(|case| {
            Box::new(move || match transform_checks(&case, seed, tol) {
                Ok(items) => items,
                Err(e) => vec![Item::Check(Check::error(
                    format!("transforms/{}", case.label()),
                    tol.unwrap_or(TOL_QUADRATURE),
                    e.to_string(),
                ))],
            }) as Task
        })
        .collect())
}

pub const FT_MAX_N: u32 = 12;
pub const FT_FINAL_ORDER: usize = 160;
/// Residuals at or below this count as converged in the doubling check.
pub const FT_FLOOR: f64 = 1e-12;

pub(crate) fn ft(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let tol = tolerance(cfg, TOL_FINITE_DIFFERENCE);
    let last = cfg.quad_order.unwrap_or(FT_FINAL_ORDER);
    let orders: Vec<usize> = [last / 8, last / 4, last / 2, last].into_iter().filter(|&o| o > 0).collect();
    Ok((0..=FT_MAX_N)
        .map(|n| {
            let orders = orders.clone();
            Box::new(move || {
                let base = format!("ft/hermite-n={n}");
                let grid = momentum_grid(6.0, 121);
                let sweep = match ft_order_sweep(n, &orders, &grid) {
                    Ok(s) => s,
                    Err(e) => return vec![Item::Check(Check::error(base, tol, e.to_string()))],
                };
                let final_report = sweep.last().expect("non-empty sweep");
                let increases = sweep
                    .windows(2)
                    .filter(|w| w[1].residual > w[0].residual && w[1].residual > FT_FLOOR)
                    .count();
                let mut out = vec![Item::Check(Check {
                    reason: warn_reason(&final_report.warnings),
                    ..Check::new(format!("{base}/eigenrelation"), final_report.residual, tol).with_count(grid.len())
                })];
                out.push(Item::Check(
                    Check::new(format!("{base}/order-doubling"), increases as f64, 0.0).with_count(sweep.len()),
                ));
                for r in &sweep {
                    out.push(Item::Observation(Observation::new(
                        format!("{base}/order={}", r.order),
                        r.residual,
                        "max |F psi_n - (-i)^n psi_n| on p in [-6, 6]",
                    )));
                }
                out
            }) as Task
        })
        .collect())
}

pub const LEGENDRE_MAX_L: i64 = 10;
pub const ZERNIKE_MAX_N: i64 = 12;
pub const PLANE_MAX_TWO_J: i64 = 12;

pub(crate) fn crossfamily(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let tol = tolerance(cfg, TOL_QUADRATURE);
    let mut rels = Vec::new();
    for l in 0..=LEGENDRE_MAX_L {
        for m in -l..=l {
            rels.push((CrossRelation::LegendreJacobi { l, m }, 200, true));
        }
    }
    for n in 0..=ZERNIKE_MAX_N {
        for m in (-n..=n).filter(|m| (n - m.abs()) % 2 == 0) {
            rels.push((CrossRelation::ZernikeJacobi { n, m, reading: ZernikeReading::HalfDegree }, 200, true));
            rels.push((CrossRelation::ZernikeJacobi { n, m, reading: ZernikeReading::Literal }, 200, false));
        }
    }
    for two_j in 0..=PLANE_MAX_TWO_J {
        for two_m in (-two_j..=two_j).step_by(2) {
            rels.push((CrossRelation::PlaneZConsistency { two_j, two_m }, 60, true));
        }
    }
    Ok(rels
        .into_iter()
        .map(|(rel, points, gated)| {
            Box::new(move || {
                let name = format!("crossfamily/{}", rel.label());
                match cross_family_residual(&rel, &relation_points(&rel, points)) {
                    Ok(r) if gated => {
                        let mut c = Check::new(name, r.scaled_residual(), tol).with_count(r.points);
                        if r.scale > 1.0 {
                            c.reason = Some(format!("residual relative to max |lhs| = {:.6e}", r.scale));
                        }
                        vec![Item::Check(c)]
                    }
                    Ok(r) => vec![Item::Observation(Observation::new(
                        name,
                        r.scaled_residual(),
                        "degree read as printed; the degree-(n-|m|)/2 reading is the gated one",
                    ))],
                    Err(e) => vec![Item::Check(Check::error(name, tol, e.to_string()))],
                }
            }) as Task
        })
        .collect())
}

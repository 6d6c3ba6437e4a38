//! Continuity inequalities, kernel bounds and point-functional constants.

use std::f64::consts::{PI, TAU};

use sgsf_algebra::Window;
use sgsf_basis::FamilyId;
use sgsf_rhs::bounds::BOUND_SLACK;
use sgsf_rhs::{
    assoc_laguerre_constant, continuity_cases, continuity_constant, domination_check, functional_bound_check,
    kernel_bound_check, lookup, Expectation,
};

use super::{tolerance, Item, Task};
use crate::config::SuiteConfig;
use crate::error::VerifyError;
use crate::report::{Check, Observation};

/// Tail bound handed to the constant summations.
pub const CONSTANT_SUM_TOL: f64 = 1e-7;
/// Gate on the summed constants against their closed forms.
pub const TOL_CONSTANT: f64 = 1e-6;

fn family_selected(cfg: &SuiteConfig, family: FamilyId) -> bool {
    cfg.family.as_deref().map_or(true, |t| t == family.tag())
}

/// Violation counts are gated at zero whatever `tol` says: an inequality
/// either holds on every trial or it does not.
pub(crate) fn seminorms(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let (trials, seed) = (cfg.trials, cfg.seed);
    let mut tasks: Vec<Task> = continuity_cases()
        .into_iter()
        .filter(|c| family_selected(cfg, c.spec.family))
        .map(|case| {
            Box::new(move || {
                let name = format!("seminorms/{}", case.label);
                match case.run(trials, seed) {
                    Ok(r) => {
                        let mut c = Check::new(name.clone(), (r.violations + r.invalid) as f64, 0.0).with_count(r.trials);
                        if let Expectation::Violated(why) = case.expectation {
                            c.reason = Some(format!("known counterexample: {why}"));
                        }
                        vec![
                            Item::Check(c),
                            Item::Observation(Observation::new(
                                format!("{name}/max-ratio"),
                                r.max_ratio,
                                "largest lhs / (constant * rhs) over trials and orders",
                            )),
                        ]
                    }
                    Err(e) => vec![Item::Check(Check::error(name, 0.0, e.to_string()))],
                }
            }) as Task
        })
        .collect();
    if family_selected(cfg, FamilyId::ZernikeW) {
        tasks.push(Box::new(move || {
            let name = "seminorms/disk-domination/zernike-l2<=zernike-l1".to_string();
            let r = lookup("zernike-l2", 0.0).and_then(|small| {
                let large = lookup("zernike-l1", 0.0)?;
                domination_check(&small, &large, &Window::standard(FamilyId::ZernikeW, 12), trials, 0..=4, seed)
            });
            match r {
                Ok(r) => vec![
                    Item::Check(Check::new(name.clone(), r.violations as f64, 0.0).with_count(r.trials)),
                    Item::Observation(Observation::new(format!("{name}/max-ratio"), r.max_ratio, "largest small / large")),
                ],
                Err(e) => vec![Item::Check(Check::error(name, 0.0, e.to_string()))],
            }
        }));
    }
    Ok(tasks)
}

pub(crate) fn bounds(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let (samples, seed) = (cfg.samples, cfg.seed);
    let tol = tolerance(cfg, BOUND_SLACK);
    let cases = [
        (FamilyId::AssocLaguerre, 12),
        (FamilyId::PlaneZ, 12),
        (FamilyId::SphericalY, 12),
        (FamilyId::ZernikeR, 16),
        (FamilyId::ZernikeW, 12),
    ];
    Ok(cases
        .into_iter()
        .filter(|(f, _)| family_selected(cfg, *f))
        .map(|(family, max)| {
            Box::new(move || {
                let window = Window::standard(family, max);
                let name = format!("bounds/{}", family.tag());
                vec![Item::Check(match kernel_bound_check(family, &window, samples, seed) {
                    Ok(r) => Check::new(name, (r.max_ratio - 1.0).max(0.0), tol)
                        .with_count(r.indices * r.samples)
                        .with_reason(format!(
                            "max |b| / bound = {:.6e} at index {:?}, point {:?}",
                            r.max_ratio, r.worst_index, r.worst_point
                        )),
                    Err(e) => Check::error(name, tol, e.to_string()),
                })]
            }) as Task
        })
        .collect())
}

fn constant_check(name: &str, family: FamilyId, p: u32, exact: f64, tol: f64) -> Check {
    match continuity_constant(family, p, CONSTANT_SUM_TOL) {
        Ok(k) => Check::new(name, (k.value - exact).abs(), tol)
            .with_count(k.terms)
            .with_reason(format!("summed {:.15e} against {exact:.15e}", k.value)),
        Err(e) => Check::error(name, tol, e.to_string()),
    }
}

fn functional_check(
    name: String,
    spec: &str,
    window: Window,
    p: u32,
    constant: Result<f64, VerifyError>,
    points: Vec<Vec<f64>>,
    trials: usize,
    seed: u64,
) -> Vec<Item> {
    let r = constant.and_then(|k| {
        let spec = lookup(spec, 0.0)?;
        Ok((k, functional_bound_check(&spec, &window, p, k, &points, trials, seed)?))
    });
    match r {
        Ok((k, r)) => vec![
            Item::Check(
                Check::new(name.clone(), r.violations as f64, 0.0)
                    .with_count(r.trials * r.points)
                    .with_reason(format!("K = {k:.15e}")),
            ),
            Item::Observation(Observation::new(format!("{name}/max-ratio"), r.max_ratio, "max |<f|x>| / (K ||f||_p)")),
        ],
        Err(e) => vec![Item::Check(Check::error(name, 0.0, e.to_string()))],
    }
}

pub(crate) fn constants(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let tol = tolerance(cfg, TOL_CONSTANT);
    let (trials, seed) = (cfg.trials, cfg.seed);
    let mut tasks: Vec<Task> = Vec::new();
    if family_selected(cfg, FamilyId::FourierCircle) {
        tasks.push(Box::new(move || {
            vec![Item::Check(constant_check(
                "constants/fourier-p=1",
                FamilyId::FourierCircle,
                1,
                (PI / PI.tanh()).sqrt(),
                tol,
            ))]
        }));
        tasks.push(Box::new(move || {
            let points = (0..32).map(|i| vec![TAU * i as f64 / 32.0]).collect();
            let k = continuity_constant(FamilyId::FourierCircle, 1, CONSTANT_SUM_TOL).map(|k| k.value);
            let window = Window::standard(FamilyId::FourierCircle, 16);
            functional_check("constants/circle-functional".into(), "fourier", window, 1, k.map_err(Into::into), points, trials, seed)
        }));
    }
    if family_selected(cfg, FamilyId::ZernikeW) {
        tasks.push(Box::new(move || {
            vec![Item::Check(constant_check(
                "constants/zernike-w-p=2",
                FamilyId::ZernikeW,
                2,
                (PI / 6.0).sqrt(),
                tol,
            ))]
        }));
        tasks.push(Box::new(move || {
            let points = (0..6)
                .flat_map(|a| (0..6).map(move |b| vec![0.2 * a as f64, PI * b as f64 / 3.0]))
                .collect();
            let k = continuity_constant(FamilyId::ZernikeW, 2, CONSTANT_SUM_TOL).map(|k| k.value);
            let window = Window::standard(FamilyId::ZernikeW, 12);
            functional_check("constants/disk-functional".into(), "zernike-l2", window, 2, k.map_err(Into::into), points, trials, seed)
        }));
    }
    if family_selected(cfg, FamilyId::AssocLaguerre) {
        tasks.push(Box::new(move || match continuity_constant(FamilyId::AssocLaguerre, 2, CONSTANT_SUM_TOL) {
            Ok(k) => vec![Item::Observation(Observation::new(
                "constants/assoc-laguerre-p=2",
                k.value,
                format!("no closed form; {} levels summed, tail below {:.3e}", k.terms, k.tail_bound),
            ))],
            Err(e) => vec![Item::Check(Check::error("constants/assoc-laguerre-p=2", tol, e.to_string()))],
        }));
    }
    if family_selected(cfg, FamilyId::PlaneZ) {
        tasks.push(Box::new(move || {
            let points = (0..10)
                .flat_map(|a| (0..6).map(move |b| vec![0.3 + 0.5 * a as f64, PI * b as f64 / 3.0]))
                .collect();
            // the window mixes both parity classes, so the constants add in quadrature
            let k = assoc_laguerre_constant(40).hypot(assoc_laguerre_constant(41));
            let window = Window::standard(FamilyId::PlaneZ, 12);
            functional_check("constants/plane-functional".into(), "plane-factorial", window, 2, Ok(k), points, trials, seed)
        }));
    }
    Ok(tasks)
}

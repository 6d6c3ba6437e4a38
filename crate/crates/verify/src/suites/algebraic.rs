//! Tabulated relations of the six algebras and the differential realizations
//! of their generators.

use std::f64::consts::TAU;

use sgsf_algebra::{
    algebra, differential_consistency, fourier_j, laguerre_position, multiplication_matrix_residual,
    run_relations_of, Algebra, AlgebraId, CheckKind, GeneratorSpec, OpExpr, Window,
};
use sgsf_basis::{FamilyId, MultiIndex};
use sgsf_quadrature::{build_rule, RuleKind};

use super::spectral::LAGUERRE_ALPHAS;
use super::{tolerance, Item, Task, TOL_ALGEBRA, TOL_FINITE_DIFFERENCE, TOL_QUADRATURE};
use crate::config::{parse_window, Suite, SuiteConfig};
use crate::error::VerifyError;
use crate::report::Check;

/// Laguerre ladders carry an extra `y` factor on the half-line, which costs
/// the difference stencil about one digit against the 1e-8 tier.
pub const TOL_LAGUERRE_DIFFERENTIAL: f64 = 1e-7;

#[derive(Clone)]
pub struct AlgebraCase {
    pub algebra: Algebra,
}

impl AlgebraCase {
    pub fn label(&self) -> String {
        match self.algebra.id {
            AlgebraId::Su11Laguerre { alpha } => format!("{}[alpha={alpha}]", self.algebra.id.tag()),
            id => id.tag().to_string(),
        }
    }
}

fn all_ids() -> Vec<AlgebraId> {
    let mut ids = vec![AlgebraId::Su2AssocLaguerre, AlgebraId::HeisenbergHermite, AlgebraId::So32Spherical];
    ids.extend(LAGUERRE_ALPHAS.iter().map(|&alpha| AlgebraId::Su11Laguerre { alpha }));
    ids.extend([AlgebraId::Su22Jacobi, AlgebraId::Su11xSu11Zernike]);
    ids
}

/// Algebras selected by `algebra`, `family` and `alpha`, with the window
/// override applied.
pub fn algebra_cases(cfg: &SuiteConfig) -> Result<Vec<AlgebraCase>, VerifyError> {
    let mut ids = match &cfg.algebra {
        Some(tag) => vec![AlgebraId::parse(tag, cfg.alpha)?],
        None => all_ids(),
    };
    if let Some(a) = cfg.alpha {
        for id in ids.iter_mut() {
            if let AlgebraId::Su11Laguerre { alpha } = id {
                *alpha = a;
            }
        }
        ids.dedup();
    }
    if let Some(tag) = &cfg.family {
        FamilyId::from_tag(tag, cfg.alpha.or(Some(0.0)))?;
        ids.retain(|id| id.family().tag() == tag);
    }
    ids.into_iter()
        .map(|id| {
            let mut alg = algebra(id);
            if let Some(text) = &cfg.window {
                let w = parse_window(alg.family, text)?;
                alg = alg.with_window(w);
            }
            Ok(AlgebraCase { algebra: alg })
        })
        .collect()
}

pub(crate) fn relations(cfg: &SuiteConfig, suite: Suite, kinds: &[CheckKind]) -> Result<Vec<Task>, VerifyError> {
    let tol = tolerance(cfg, TOL_ALGEBRA);
    let kinds = kinds.to_vec();
    Ok(algebra_cases(cfg)?
        .into_iter()
        .map(|case| {
            let kinds = kinds.clone();
            Box::new(move || {
                let base = format!("{}/{}", suite.tag(), case.label());
                match run_relations_of(&case.algebra, &kinds) {
                    Ok(results) => results
                        .into_iter()
                        .map(|r| {
                            // table labels lead with "<algebra>-<kind>-"; the algebra is
                            // already in `base`, and so is the kind unless two kinds share
                            // the suite
                            let tag = format!("{}-", case.algebra.id.tag());
                            let mut label = r.label.strip_prefix(&tag).unwrap_or(&r.label);
                            if kinds.len() == 1 {
                                let kind = format!("{}-", r.kind.tag());
                                label = label.strip_prefix(&kind).unwrap_or(label);
                            }
                            Item::Check(Check::new(format!("{base}/{label}"), r.residual, tol).with_count(r.count))
                        })
                        .collect(),
                    Err(e) => vec![Item::Check(Check::error(base, tol, e.to_string()))],
                }
            }) as Task
        })
        .collect())
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<Vec<f64>> {
    (0..n).map(|k| vec![lo + (hi - lo) * (k as f64 + 0.5) / n as f64]).collect()
}

/// One check over every listed index: the worst pointwise residual.
fn realization_check(
    name: String,
    g: &GeneratorSpec,
    family: FamilyId,
    indices: &[Vec<i64>],
    points: &[Vec<f64>],
    tol: f64,
) -> Check {
    let mut worst: f64 = 0.0;
    let mut fd: f64 = 0.0;
    for idx in indices {
        let r = MultiIndex::new(family, idx.clone())
            .map_err(VerifyError::from)
            .and_then(|mi| Ok(differential_consistency(g, &mi, points)?));
        match r {
            Ok(r) => {
                worst = worst.max(r.residual);
                fd = fd.max(r.fd_error);
            }
            Err(e) => return Check::error(name, tol, format!("{idx:?}: {e}")),
        }
    }
    let c = Check::new(name, worst, tol).with_count(indices.len() * points.len());
    if fd > 0.0 {
        c.with_reason(format!("Richardson level difference up to {fd:.3e}"))
    } else {
        c
    }
}

fn wanted(cfg: &SuiteConfig, family: FamilyId) -> bool {
    cfg.family.as_deref().map_or(true, |t| t == family.tag())
}

fn gen_task(alg: Algebra, name: &'static str, f: impl Fn(&Algebra, &GeneratorSpec) -> Check + Send + Sync + 'static) -> Task {
    Box::new(move || {
        vec![Item::Check(match alg.generator(name) {
            Ok(g) => f(&alg, g),
            Err(e) => Check::error(format!("differential/{}/{name}", alg.id.tag()), 0.0, e.to_string()),
        })]
    })
}

pub(crate) fn differential(cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    let fd_tol = tolerance(cfg, TOL_FINITE_DIFFERENCE);
    let lag_tol = tolerance(cfg, TOL_LAGUERRE_DIFFERENTIAL);
    let exact_tol = tolerance(cfg, TOL_QUADRATURE);
    let alphas: Vec<f64> = cfg.alpha.map_or(LAGUERRE_ALPHAS.to_vec(), |a| vec![a]);
    let mut tasks: Vec<Task> = Vec::new();

    if wanted(cfg, FamilyId::FourierCircle) {
        tasks.push(Box::new(move || {
            let indices: Vec<Vec<i64>> = (-16..=16).map(|m| vec![m]).collect();
            vec![Item::Check(realization_check(
                "differential/fourier/J=i d/dphi".into(),
                &fourier_j(),
                FamilyId::FourierCircle,
                &indices,
                &grid(0.0, TAU, 37),
                fd_tol,
            ))]
        }));
    }

    if wanted(cfg, FamilyId::Hermite) {
        for name in ["a", "a+", "Q", "P"] {
            tasks.push(gen_task(algebra(AlgebraId::HeisenbergHermite), name, move |alg, g| {
                let indices: Vec<Vec<i64>> = (0..=24).map(|n| vec![n]).collect();
                let label = format!("differential/{}/{name}", alg.id.tag());
                realization_check(label, g, alg.family, &indices, &grid(-5.0, 5.0, 41), fd_tol)
            }));
        }
        tasks.push(Box::new(move || {
            let name = "differential/heisenberg_hermite/Q=x[gauss-hermite-80]".to_string();
            let alg = algebra(AlgebraId::HeisenbergHermite);
            let r = alg.generator("Q").map_err(VerifyError::from).and_then(|q| {
                let rule = build_rule(RuleKind::Hermite, 80, None).map_err(|e| VerifyError::Input(e.to_string()))?;
                Ok(multiplication_matrix_residual(&OpExpr::gen(q), alg.family, &Window::standard(alg.family, 32), &rule, |t| t)?)
            });
            vec![Item::Check(match r {
                Ok(r) => Check::new(name, r.residual, exact_tol).with_count(r.count),
                Err(e) => Check::error(name, exact_tol, e.to_string()),
            })]
        }));
    }

    for &alpha in &alphas {
        if !wanted(cfg, FamilyId::LaguerreM { alpha }) {
            continue;
        }
        let id = AlgebraId::Su11Laguerre { alpha };
        for name in ["K+", "K-"] {
            tasks.push(gen_task(algebra(id), name, move |alg, g| {
                let indices: Vec<Vec<i64>> = (0..=16).map(|n| vec![n]).collect();
                let label = format!("differential/su11_laguerre[alpha={alpha}]/{name}");
                realization_check(label, g, alg.family, &indices, &grid(0.2, 12.0, 30), lag_tol)
            }));
        }
        tasks.push(Box::new(move || {
            let name = format!("differential/su11_laguerre[alpha={alpha}]/Y=y[gauss-laguerre-80]");
            let alg = algebra(id);
            let r = laguerre_position(&alg).map_err(VerifyError::from).and_then(|y| {
                let rule = build_rule(RuleKind::Laguerre { alpha }, 80, None)
                    .map_err(|e| VerifyError::Input(e.to_string()))?;
                Ok(multiplication_matrix_residual(&y, alg.family, &Window::standard(alg.family, 30), &rule, |t| t)?)
            });
            vec![Item::Check(match r {
                Ok(r) => Check::new(name, r.residual, exact_tol).with_count(r.count),
                Err(e) => Check::error(name, exact_tol, e.to_string()),
            })]
        }));
    }

    if wanted(cfg, FamilyId::AssocLaguerre) {
        for name in ["K+", "K-"] {
            tasks.push(gen_task(algebra(AlgebraId::Su2AssocLaguerre), name, move |alg, g| {
                let indices: Vec<Vec<i64>> =
                    (0..=12i64).flat_map(|tj| (-tj..=tj).step_by(2).map(move |tm| vec![tj, tm])).collect();
                let label = format!("differential/{}/{name}", alg.id.tag());
                realization_check(label, g, alg.family, &indices, &grid(0.2, 12.0, 30), lag_tol)
            }));
        }
    }

    if wanted(cfg, FamilyId::ZernikeW) {
        tasks.push(gen_task(algebra(AlgebraId::Su11xSu11Zernike), "P", move |alg, g| {
            let points: Vec<Vec<f64>> = (0..12)
                .flat_map(|a| (0..9).map(move |b| vec![0.04 + 0.08 * a as f64, 0.7 * b as f64]))
                .collect();
            let indices: Vec<Vec<i64>> = (0..=10).flat_map(|u| (0..=10).map(move |v| vec![u, v])).collect();
            let label = format!("differential/{}/P=r e^(i phi)", alg.id.tag());
            realization_check(label, g, alg.family, &indices, &points, exact_tol)
        }));
    }
    Ok(tasks)
}

//! Analysis by quadrature, synthesis by compensated sums, and the identities
//! tying them together on truncated spans.

use std::collections::BTreeMap;

use num_complex::Complex64;
use sgsf_algebra::{CoeffVec, Window};
use sgsf_basis::{evaluate_scaled, FamilyId, MultiIndex};
use sgsf_quadrature::{CompensatedSum, ComplexSum};

use crate::error::TransformError;
use crate::plan::QuadPlan;

/// Key of the orthogonality class of an index. Members of one class are
/// orthonormal under the family measure; members of different classes of a
/// one-dimensional family (or of opposite parity on the plane) need not be.
pub fn class_key(family: FamilyId, idx: &[i64]) -> Vec<i64> {
    match family {
        FamilyId::AssocLaguerre | FamilyId::ZernikeR => vec![idx[1]],
        FamilyId::JacobiJ => vec![idx[1], idx[2]],
        FamilyId::PlaneZ => vec![idx[0].rem_euclid(2)],
        // phi separates m, chi separates even q - q'; odd q - q' is open
        FamilyId::HypersphereN => vec![idx[0].rem_euclid(2), idx[2].rem_euclid(4)],
        _ => Vec::new(),
    }
}

/// Window indices grouped by orthogonality class, classes in key order.
pub fn ortho_classes(family: FamilyId, window: &Window) -> Vec<Vec<Vec<i64>>> {
    let mut map: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    for idx in window.indices(family) {
        map.entry(class_key(family, &idx)).or_default().push(idx);
    }
    map.into_values().collect()
}

fn check_plan(family: FamilyId, plan: &QuadPlan) -> Result<(), TransformError> {
    if plan.family() != family {
        return Err(TransformError::PlanMismatch {
            plan: plan.family().tag(),
            family: family.tag(),
        });
    }
    Ok(())
}

/// Scaled basis values, one row per index, one column per point.
pub fn basis_matrix(
    family: FamilyId,
    indices: &[Vec<i64>],
    points: &[Vec<f64>],
) -> Result<Vec<Vec<Complex64>>, TransformError> {
    indices
        .iter()
        .map(|idx| {
            let mi = MultiIndex::new(family, idx.clone())?;
            points
                .iter()
                .map(|p| evaluate_scaled(&mi, p).map_err(TransformError::from))
                .collect()
        })
        .collect()
}

/// `sum_i a_i b_i(x)` at each point.
pub fn synthesize(v: &CoeffVec, points: &[Vec<f64>]) -> Result<Vec<Complex64>, TransformError> {
    let entries: Vec<(MultiIndex, Complex64)> = v
        .iter()
        .map(|(idx, a)| Ok((MultiIndex::new(v.family(), idx.to_vec())?, a)))
        .collect::<Result<_, TransformError>>()?;
    points
        .iter()
        .map(|p| {
            let mut acc = ComplexSum::new();
            for (mi, a) in &entries {
                acc.add(a * evaluate_scaled(mi, p)?);
            }
            Ok(acc.value())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub coeffs: CoeffVec,
    /// Plan axes below the order the window needs.
    pub warnings: Vec<String>,
}

fn sample<F>(f: F, plan: &QuadPlan) -> Result<Vec<Complex64>, TransformError>
where
    F: Fn(&[f64]) -> Complex64,
{
    plan.points()
        .iter()
        .map(|p| {
            let v = f(p);
            if v.re.is_finite() && v.im.is_finite() {
                Ok(v)
            } else {
                Err(TransformError::NonFinite(p.clone()))
            }
        })
        .collect()
}

fn project(
    family: FamilyId,
    window: &Window,
    indices: &[Vec<i64>],
    values: &[Complex64],
    plan: &QuadPlan,
) -> Result<CoeffVec, TransformError> {
    let b = basis_matrix(family, indices, plan.points())?;
    let entries = indices.iter().zip(&b).map(|(idx, row)| {
        let mut acc = ComplexSum::new();
        for ((bi, fi), w) in row.iter().zip(values).zip(plan.weights()) {
            acc.add(bi.conj() * fi * *w);
        }
        (idx.clone(), acc.value())
    });
    Ok(CoeffVec::from_entries(family, window.clone(), entries.collect::<Vec<_>>())?)
}

/// `a_i = sum_nodes w conj(b_i) f` over every index of the window.
pub fn analyze<F>(f: F, family: FamilyId, window: &Window, plan: &QuadPlan) -> Result<Analysis, TransformError>
where
    F: Fn(&[f64]) -> Complex64,
{
    analyze_indices(f, family, window, &window.indices(family), plan)
}

/// [`analyze`] restricted to `indices`, which must lie in `window`.
pub fn analyze_indices<F>(
    f: F,
    family: FamilyId,
    window: &Window,
    indices: &[Vec<i64>],
    plan: &QuadPlan,
) -> Result<Analysis, TransformError>
where
    F: Fn(&[f64]) -> Complex64,
{
    check_plan(family, plan)?;
    let values = sample(f, plan)?;
    Ok(Analysis {
        coeffs: project(family, window, indices, &values, plan)?,
        warnings: plan.warnings(window),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub family: FamilyId,
    pub classes: usize,
    pub functions: usize,
    /// `max |G - I|` over all within-class pairs.
    pub residual: f64,
    pub worst: (Vec<i64>, Vec<i64>),
    pub warnings: Vec<String>,
}

/// Gram matrices of every orthogonality class of the window under the plan.
pub fn gram_residual(family: FamilyId, window: &Window, plan: &QuadPlan) -> Result<GramReport, TransformError> {
    check_plan(family, plan)?;
    let classes = ortho_classes(family, window);
    let mut report = GramReport {
        family,
        classes: classes.len(),
        functions: 0,
        residual: 0.0,
        worst: (Vec::new(), Vec::new()),
        warnings: plan.warnings(window),
    };
    for class in &classes {
        report.functions += class.len();
        let b = basis_matrix(family, class, plan.points())?;
        for a in 0..class.len() {
            for c in a..class.len() {
                let g = inner(&b[a], &b[c], plan.weights());
                let target = if a == c { 1.0 } else { 0.0 };
                let r = (g - target).norm();
                if r > report.residual {
                    report.residual = r;
                    report.worst = (class[a].clone(), class[c].clone());
                }
            }
        }
    }
    Ok(report)
}

/// `sum w conj(x) y`
pub(crate) fn inner(x: &[Complex64], y: &[Complex64], w: &[f64]) -> Complex64 {
    let mut acc = ComplexSum::new();
    for ((a, b), w) in x.iter().zip(y).zip(w) {
        acc.add(a.conj() * b * *w);
    }
    acc.value()
}

fn check_span(v: &CoeffVec, span: &[Vec<i64>]) -> Result<(), TransformError> {
    match v.iter().find(|(idx, _)| !span.iter().any(|s| s.as_slice() == *idx)) {
        Some((idx, _)) => Err(TransformError::OutsideSpan(idx.to_vec())),
        None => Ok(()),
    }
}

/// `max_i |analyze(synthesize(v))_i - v_i|` over `span`, which should be one
/// orthogonality class containing the support of `v`.
pub fn round_trip_residual(v: &CoeffVec, span: &[Vec<i64>], plan: &QuadPlan) -> Result<f64, TransformError> {
    check_plan(v.family(), plan)?;
    check_span(v, span)?;
    let values = synthesize(v, plan.points())?;
    let back = project(v.family(), v.window(), span, &values, plan)?;
    Ok(back.max_abs_diff(v))
}

/// `| sum |a_i|^2 - integral |f|^2 |` for `f = synthesize(v)`.
pub fn parseval_residual(v: &CoeffVec, plan: &QuadPlan) -> Result<f64, TransformError> {
    check_plan(v.family(), plan)?;
    let values = synthesize(v, plan.points())?;
    let mut energy = CompensatedSum::new();
    for (f, w) in values.iter().zip(plan.weights()) {
        energy.add(f.norm_sqr() * w);
    }
    let mut coeffs = CompensatedSum::new();
    for (_, a) in v.iter() {
        coeffs.add(a.norm_sqr());
    }
    Ok((energy.value() - coeffs.value()).abs())
}

/// `max_x | integral K_N(x, x') f(x') dmu(x') - f(x) |` over the probes, with
/// the truncated kernel `K_N(x, x') = sum_span b(x) conj(b(x'))` summed
/// literally and `f = synthesize(v)`.
pub fn kernel_projection_residual(
    v: &CoeffVec,
    span: &[Vec<i64>],
    plan: &QuadPlan,
    probes: &[Vec<f64>],
) -> Result<f64, TransformError> {
    let family = v.family();
    check_plan(family, plan)?;
    check_span(v, span)?;
    let f_nodes = synthesize(v, plan.points())?;
    let f_probes = synthesize(v, probes)?;
    let b_nodes = basis_matrix(family, span, plan.points())?;
    let b_probes = basis_matrix(family, span, probes)?;
    let mut worst: f64 = 0.0;
    for (p, fp) in f_probes.iter().enumerate() {
        let mut acc = ComplexSum::new();
        for (i, (fi, w)) in f_nodes.iter().zip(plan.weights()).enumerate() {
            let mut k = ComplexSum::new();
            for (bp, bn) in b_probes.iter().zip(&b_nodes) {
                k.add(bp[p] * bn[i].conj());
            }
            acc.add(k.value() * fi * *w);
        }
        worst = worst.max((acc.value() - fp).norm());
    }
    Ok(worst)
}

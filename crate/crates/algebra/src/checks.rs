use num_complex::Complex64;
use sgsf_basis::FamilyId;

use crate::coeff::CoeffVec;
use crate::error::AlgebraError;
use crate::generator::{GeneratorSpec, Mode, OpExpr};
use crate::window::Window;

/// Max-abs residual over the basis vectors that stayed interior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub residual: f64,
    /// Basis vectors (or index pairs for adjoint checks) examined.
    pub count: usize,
    /// Basis vectors whose strict application left the window.
    pub skipped: usize,
}

/// Casimir check with the spread of the diagonal values found.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasimirReport {
    pub residual: f64,
    pub count: usize,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

/// Weight relation check; `delta` is the ladder's weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightReport {
    pub residual: f64,
    pub delta: f64,
    pub count: usize,
}

/// Applies `expr` strictly to every basis vector of `sources` (the whole
/// window if `None`). Vectors whose image leaves the window are skipped; the
/// rest form the interior.
fn interior_images(
    expr: &OpExpr,
    family: FamilyId,
    window: &Window,
    sources: Option<&Window>,
) -> Result<(Vec<(Vec<i64>, CoeffVec)>, usize), AlgebraError> {
    window.check_arity(family)?;
    let mut out = Vec::new();
    let mut skipped = 0;
    let indices = sources.unwrap_or(window).indices(family);
    for idx in indices {
        if !window.contains_bounds(&idx) {
            return Err(AlgebraError::OutsideWindow(idx));
        }
        let e = CoeffVec::basis(family, window.clone(), &idx)?;
        match expr.apply(&e, Mode::Strict) {
            Ok(v) => out.push((idx, v)),
            Err(AlgebraError::WindowOverflow { .. }) => skipped += 1,
            Err(err) => return Err(err),
        }
    }
    if out.is_empty() {
        return Err(AlgebraError::EmptyInterior);
    }
    Ok((out, skipped))
}

/// `max_i || (lhs - rhs) e_i ||_inf` over the interior subwindow.
pub fn expr_residual(
    lhs: &OpExpr,
    rhs: &OpExpr,
    family: FamilyId,
    window: &Window,
) -> Result<Residual, AlgebraError> {
    expr_residual_from(lhs, rhs, family, window, None)
}

/// As [`expr_residual`], with source vectors restricted to a subwindow so
/// that intermediate images may pass through indices that are not sources.
pub fn expr_residual_from(
    lhs: &OpExpr,
    rhs: &OpExpr,
    family: FamilyId,
    window: &Window,
    sources: Option<&Window>,
) -> Result<Residual, AlgebraError> {
    let diff = lhs.clone().minus(rhs.clone());
    let (images, skipped) = interior_images(&diff, family, window, sources)?;
    Ok(Residual {
        residual: images.iter().map(|(_, v)| v.max_abs()).fold(0.0, f64::max),
        count: images.len(),
        skipped,
    })
}

/// Residual of `[a, b] = expected`.
pub fn commutator_residual(
    a: &GeneratorSpec,
    b: &GeneratorSpec,
    expected: &OpExpr,
    window: &Window,
) -> Result<Residual, AlgebraError> {
    expr_residual(&OpExpr::commutator(a, b), expected, a.family(), window)
}

/// Applies a Casimir combination and compares with the predicted scalar on
/// each interior basis vector.
pub fn casimir_residual<P>(
    casimir: &OpExpr,
    predicted: P,
    family: FamilyId,
    window: &Window,
) -> Result<CasimirReport, AlgebraError>
where
    P: Fn(&[i64]) -> f64,
{
    let (images, _) = interior_images(casimir, family, window, None)?;
    let mut residual: f64 = 0.0;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (idx, v) in &images {
        let want = predicted(idx);
        let diag = v.get(idx);
        lo = lo.min(diag.re);
        hi = hi.max(diag.re);
        let e = CoeffVec::basis(family, v.window().clone(), idx)?;
        residual = residual.max(v.axpy(Complex64::new(-want, 0.0), &e)?.max_abs());
    }
    Ok(CasimirReport {
        residual,
        count: images.len(),
        min_eigenvalue: lo,
        max_eigenvalue: hi,
    })
}

/// Residual of `[cartan, g] = delta g`, where `delta` is the shift of `g` in
/// the cartan's quantum number.
pub fn cartan_weight_residual(
    g: &GeneratorSpec,
    cartan: &GeneratorSpec,
    window: &Window,
) -> Result<WeightReport, AlgebraError> {
    let lin = cartan
        .cartan()
        .filter(|_| cartan.is_diagonal())
        .ok_or_else(|| AlgebraError::NotCartan(cartan.name().to_string()))?;
    let mut deltas = g.terms().iter().map(|t| lin.scale * t.shift[lin.component] as f64);
    let delta = deltas.next().unwrap_or(0.0);
    if deltas.any(|d| d != delta) {
        return Err(AlgebraError::NotHomogeneous {
            ladder: g.name().to_string(),
            cartan: cartan.name().to_string(),
        });
    }
    let r = commutator_residual(cartan, g, &OpExpr::gen(g).times(delta), window)?;
    Ok(WeightReport {
        residual: r.residual,
        delta,
        count: r.count,
    })
}

/// `max |<g+ e_i, e_j> - <e_i, g- e_j>|` over all window pairs. Only pairs
/// with a non-zero element on either side can differ, so only those are
/// visited; `count` reports the full number of pairs.
pub fn adjoint_pair_residual(
    plus: &GeneratorSpec,
    minus: &GeneratorSpec,
    window: &Window,
) -> Result<Residual, AlgebraError> {
    let family = plus.family();
    window.check_arity(family)?;
    let indices = window.indices(family);
    let mut residual: f64 = 0.0;
    for i in &indices {
        for (t, v) in plus.image(i)? {
            if window.contains(family, &t) {
                residual = residual.max((v.conj() - minus.matrix_element(i, &t)?).norm());
            }
        }
        for (t, v) in minus.image(i)? {
            if window.contains(family, &t) {
                // <g+ e_t, e_i> against <e_t, g- e_i>
                residual = residual.max((plus.matrix_element(i, &t)?.conj() - v).norm());
            }
        }
    }
    Ok(Residual {
        residual,
        count: indices.len() * indices.len(),
        skipped: 0,
    })
}

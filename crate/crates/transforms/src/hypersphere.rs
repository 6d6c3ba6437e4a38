//! Orthogonality of hypersphere functions across a whole parity class.

use sgsf_algebra::Window;
use sgsf_basis::FamilyId;

use crate::analysis::{basis_matrix, inner};
use crate::error::TransformError;
use crate::plan::QuadPlan;

/// Gram deviations within one `2j`-parity class, split by the parity of
/// `q - q'`. Only the even part is forced by the angular integrals.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersphereObservation {
    pub two_j_parity: i64,
    pub functions: usize,
    /// `max |G - I|` over pairs with even `q - q'`
    pub even_residual: f64,
    /// `max |G|` over pairs with odd `q - q'`
    pub odd_residual: f64,
    pub worst_odd: Option<(Vec<i64>, Vec<i64>)>,
}

pub fn hypersphere_orthogonality(window: &Window, plan: &QuadPlan) -> Result<Vec<HypersphereObservation>, TransformError> {
    let family = FamilyId::HypersphereN;
    if plan.family() != family {
        return Err(TransformError::PlanMismatch {
            plan: plan.family().tag(),
            family: family.tag(),
        });
    }
    let all = window.indices(family);
    let mut out = Vec::new();
    for parity in 0..2 {
        let class: Vec<Vec<i64>> = all.iter().filter(|i| i[0].rem_euclid(2) == parity).cloned().collect();
        if class.is_empty() {
            continue;
        }
        let b = basis_matrix(family, &class, plan.points())?;
        let mut obs = HypersphereObservation {
            two_j_parity: parity,
            functions: class.len(),
            even_residual: 0.0,
            odd_residual: 0.0,
            worst_odd: None,
        };
        for a in 0..class.len() {
            for c in a..class.len() {
                let g = inner(&b[a], &b[c], plan.weights());
                // doubled q: q - q' odd iff 2q - 2q' = 2 mod 4
                if (class[a][2] - class[c][2]).rem_euclid(4) == 0 {
                    let target = if a == c { 1.0 } else { 0.0 };
                    obs.even_residual = obs.even_residual.max((g - target).norm());
                } else if g.norm() > obs.odd_residual {
                    obs.odd_residual = g.norm();
                    obs.worst_odd = Some((class[a].clone(), class[c].clone()));
                }
            }
        }
        out.push(obs);
    }
    Ok(out)
}

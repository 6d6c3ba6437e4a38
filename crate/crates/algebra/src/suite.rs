//! Runs every tabulated relation of an algebra.

use crate::checks::{adjoint_pair_residual, cartan_weight_residual, casimir_residual, expr_residual_from};
use crate::error::AlgebraError;
use crate::tables::Algebra;

/// Kind of tabulated relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Commutator,
    Casimir,
    Adjoint,
    Weight,
    Composition,
}

impl CheckKind {
    pub fn tag(&self) -> &'static str {
        match self {
            CheckKind::Commutator => "commutator",
            CheckKind::Casimir => "casimir",
            CheckKind::Adjoint => "adjoint",
            CheckKind::Weight => "weight",
            CheckKind::Composition => "composition",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationResult {
    pub label: String,
    pub kind: CheckKind,
    pub residual: f64,
    pub count: usize,
}

/// Every relation of `alg` on its window (or the relation's own window).
pub fn run_relations(alg: &Algebra) -> Result<Vec<RelationResult>, AlgebraError> {
    use CheckKind::*;
    run_relations_of(alg, &[Commutator, Composition, Casimir, Adjoint, Weight])
}

/// The relations of `alg` whose kind is listed, in the order of
/// [`run_relations`].
pub fn run_relations_of(alg: &Algebra, kinds: &[CheckKind]) -> Result<Vec<RelationResult>, AlgebraError> {
    let mut out = Vec::new();
    let pick = |w: &Option<crate::Window>| w.clone().unwrap_or_else(|| alg.window.clone());
    fn keep<'a, T>(on: bool, list: &'a [T]) -> &'a [T] {
        if on {
            list
        } else {
            &[]
        }
    }
    let has = |k| kinds.contains(&k);
    let commutators = keep(has(CheckKind::Commutator), &alg.commutators);
    let compositions = keep(has(CheckKind::Composition), &alg.compositions);
    let casimirs = keep(has(CheckKind::Casimir), &alg.casimirs);
    let adjoints = keep(has(CheckKind::Adjoint), &alg.adjoint_pairs);
    let weights = keep(has(CheckKind::Weight), &alg.weights);
    for r in commutators {
        let res = expr_residual_from(&r.lhs, &r.rhs, alg.family, &pick(&r.window), r.sources.as_ref())?;
        out.push(RelationResult {
            label: r.label.clone(),
            kind: CheckKind::Commutator,
            residual: res.residual,
            count: res.count,
        });
    }
    for r in compositions {
        let res = expr_residual_from(&r.lhs, &r.rhs, alg.family, &pick(&r.window), r.sources.as_ref())?;
        out.push(RelationResult {
            label: r.label.clone(),
            kind: CheckKind::Composition,
            residual: res.residual,
            count: res.count,
        });
    }
    for c in casimirs {
        let predicted = c.predicted.clone();
        let res = casimir_residual(&c.expr, move |i| predicted(i), alg.family, &pick(&c.window))?;
        out.push(RelationResult {
            label: c.label.clone(),
            kind: CheckKind::Casimir,
            residual: res.residual,
            count: res.count,
        });
    }
    for p in adjoints {
        let res = adjoint_pair_residual(alg.generator(&p.first)?, alg.generator(&p.second)?, &pick(&p.window))?;
        out.push(RelationResult {
            label: p.label.clone(),
            kind: CheckKind::Adjoint,
            residual: res.residual,
            count: res.count,
        });
    }
    for p in weights {
        let res = cartan_weight_residual(alg.generator(&p.first)?, alg.generator(&p.second)?, &pick(&p.window))?;
        out.push(RelationResult {
            label: p.label.clone(),
            kind: CheckKind::Weight,
            residual: res.residual,
            count: res.count,
        });
    }
    Ok(out)
}

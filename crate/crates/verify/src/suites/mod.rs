//! Suite registry: each suite expands into independent tasks, run on a
//! work-stealing pool and merged back in registration order.

mod algebraic;
mod analytic;
mod spectral;

use std::time::Instant;

use rayon::prelude::*;

use crate::config::{Suite, SuiteConfig};
use crate::error::VerifyError;
use crate::report::{Check, Observation, VerificationReport};

pub use algebraic::{algebra_cases, AlgebraCase};
pub use spectral::{family_cases, FamilyCase};

/// Quadrature identities.
pub const TOL_QUADRATURE: f64 = 1e-10;
/// Exact-arithmetic algebra identities.
pub const TOL_ALGEBRA: f64 = 1e-12;
/// Finite-difference and transform checks.
pub const TOL_FINITE_DIFFERENCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Check(Check),
    Observation(Observation),
}

pub(crate) type Task = Box<dyn Fn() -> Vec<Item> + Send + Sync>;

pub(crate) fn tolerance(cfg: &SuiteConfig, default: f64) -> f64 {
    cfg.tol.unwrap_or(default)
}

fn tasks_for(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Task>, VerifyError> {
    use crate::suites::algebraic::*;
    use crate::suites::analytic::*;
    use crate::suites::spectral::*;
    use sgsf_algebra::CheckKind::*;
    match suite {
        Suite::Orthonormality => orthonormality(cfg),
        Suite::Commutators => relations(cfg, suite, &[Commutator]),
        Suite::Casimir => relations(cfg, suite, &[Casimir]),
        Suite::Adjoint => relations(cfg, suite, &[Adjoint]),
        Suite::Weights => relations(cfg, suite, &[Weight, Composition]),
        Suite::Differential => differential(cfg),
        Suite::Seminorms => seminorms(cfg),
        Suite::Bounds => bounds(cfg),
        Suite::Constants => constants(cfg),
        Suite::Transforms => transforms(cfg),
        Suite::Ft => ft(cfg),
        Suite::Crossfamily => crossfamily(cfg),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

/// Runs the configured suite. Configuration problems are errors; numerical
/// failures are failing checks.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    let start = Instant::now();
    let mut tasks = Vec::new();
    for s in cfg.suite.expand() {
        tasks.extend(tasks_for(s, cfg)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.unwrap_or(0))
        .build()
        .map_err(|e| VerifyError::InvalidConfig(e.to_string()))?;
    let results: Vec<Vec<Item>> = pool.install(|| tasks.par_iter().map(|t| t()).collect());
    let mut checks = Vec::new();
    let mut observations = Vec::new();
    for item in results.into_iter().flatten() {
        match item {
            Item::Check(c) => checks.push(c),
            Item::Observation(o) => observations.push(o),
        }
    }
    let mut report = VerificationReport::new(cfg.clone(), checks, observations);
    if cfg.timing {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

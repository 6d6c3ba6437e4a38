//! The acceptance battery: thirteen criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p sgsf-verify --test acceptance -- --nocapture` to
//! see the lines. A criterion that cannot hold is printed as FAIL and its
//! failure is pinned down exactly instead of being gated green.

use std::process::Command;
use std::time::{Duration, Instant};

use sgsf_verify::{run_suite, Check, Suite, SuiteConfig, VerificationReport};

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(suite: Suite) -> (VerificationReport, Duration) {
    let start = Instant::now();
    let report = run_suite(&SuiteConfig::new(suite)).expect("default configuration runs");
    (report, start.elapsed())
}

fn worst(checks: &[&Check]) -> f64 {
    checks.iter().map(|c| c.residual).fold(0.0, f64::max)
}

/// Every check passes and every required name is present.
fn all_pass(report: &VerificationReport, required: &[&str]) -> Outcome {
    let checks: Vec<&Check> = report.checks.iter().collect();
    let missing: Vec<&&str> = required.iter().filter(|r| report.check(r).is_none()).collect();
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    Outcome {
        pass: !checks.is_empty() && missing.is_empty() && failed.is_empty(),
        detail: format!(
            "{} checks, worst residual {:.3e}; failed {:?}; missing {:?}",
            checks.len(),
            worst(&checks),
            failed,
            missing
        ),
    }
}

fn orthonormality() -> Outcome {
    let (report, took) = run(Suite::Orthonormality);
    let mut o = all_pass(
        &report,
        &[
            "orthonormality/fourier/|m|<=16",
            "orthonormality/hermite/n<=32",
            "orthonormality/laguerre-m[alpha=-0.5]/n<=32",
            "orthonormality/laguerre-m[alpha=0]/n<=32",
            "orthonormality/laguerre-m[alpha=1]/n<=32",
            "orthonormality/laguerre-m[alpha=2.5]/n<=32",
            "orthonormality/assoc-laguerre/j<=8",
            "orthonormality/sph-y/l<=16",
            "orthonormality/jacobi-j/j<=8",
            "orthonormality/zernike-r/n<=16",
            "orthonormality/zernike-w/u+v<=16",
        ],
    );
    o.pass &= report.checks.iter().all(|c| c.tolerance == 1e-10);
    o.pass &= took < Duration::from_secs(60);
    o.detail = format!("{}; {:.2} s", o.detail, took.as_secs_f64());
    o
}

fn commutators() -> Outcome {
    let (report, _) = run(Suite::Commutators);
    all_pass(
        &report,
        &[
            "commutators/su2_assoc_laguerre/[K+,K-]",
            "commutators/su11_laguerre[alpha=0]/[K+,K-]",
            "commutators/su22_jacobi/[K+,K-]@2m=3,2q=1",
            "commutators/heisenberg_hermite/[a,a+]",
            "commutators/su11xsu11_zernike/[A+,A-]",
            "commutators/su11xsu11_zernike/[B+,B-]",
            "commutators/su11xsu11_zernike/[A+,B-]",
            "commutators/su11xsu11_zernike/[A3,B3]",
        ],
    )
}

fn casimirs() -> Outcome {
    let (report, _) = run(Suite::Casimir);
    all_pass(
        &report,
        &[
            "casimir/heisenberg_hermite/(Q^2+P^2)/2-(N+I/2)",
            "casimir/su11_laguerre[alpha=0]/K3^2-{K+,K-}/2",
            "casimir/su11_laguerre[alpha=1]/K3^2-{K+,K-}/2",
            "casimir/su11_laguerre[alpha=2.5]/K3^2-{K+,K-}/2",
            "casimir/su11xsu11_zernike/A",
            "casimir/su11xsu11_zernike/B",
        ],
    )
}

fn adjoints() -> Outcome {
    let (report, _) = run(Suite::Adjoint);
    let mut o = all_pass(
        &report,
        &[
            "adjoint/heisenberg_hermite/a+-a",
            "adjoint/su11_laguerre[alpha=0]/K+-K-",
            "adjoint/su11xsu11_zernike/A+-A-",
            "adjoint/su11xsu11_zernike/B+-B-",
            "adjoint/su22_jacobi/A+-A-",
            "adjoint/su22_jacobi/F+-F-",
        ],
    );
    let small = report.checks.iter().filter(|c| c.count.map_or(true, |n| n < 100)).count();
    o.pass &= small == 0;
    o.detail = format!("{}; {small} windows under 100 pairs", o.detail);
    o
}

fn weights() -> Outcome {
    let (report, _) = run(Suite::Weights);
    let mut o = all_pass(&report, &["weights/so32_spherical/weight-L-R+", "weights/su22_jacobi/composition-K+@2m=3,2q=1"]);
    let so32 = report.checks.iter().filter(|c| c.name.starts_with("weights/so32_spherical/")).count();
    let su22 = report.checks.iter().filter(|c| c.name.starts_with("weights/su22_jacobi/weight-")).count();
    let comp = report.checks.iter().filter(|c| c.name.contains("/composition-")).count();
    o.pass &= so32 > 0 && su22 > 0 && comp > 0;
    o.detail = format!("{}; so(3,2) {so32}, su(2,2) {su22}, compositions {comp}", o.detail);
    o
}

fn differential() -> Outcome {
    let (report, _) = run(Suite::Differential);
    all_pass(
        &report,
        &[
            "differential/fourier/J=i d/dphi",
            "differential/heisenberg_hermite/a",
            "differential/su11_laguerre[alpha=0]/Y=y[gauss-laguerre-80]",
            "differential/su11xsu11_zernike/P=r e^(i phi)",
        ],
    )
}

fn fourier_eigenrelation() -> Outcome {
    let (report, _) = run(Suite::Ft);
    let required: Vec<String> = (0..=12)
        .flat_map(|n| [format!("ft/hermite-n={n}/eigenrelation"), format!("ft/hermite-n={n}/order-doubling")])
        .collect();
    let required: Vec<&str> = required.iter().map(String::as_str).collect();
    all_pass(&report, &required)
}

fn bounds() -> Outcome {
    let (report, _) = run(Suite::Bounds);
    let mut o = all_pass(
        &report,
        &["bounds/assoc-laguerre", "bounds/plane-z", "bounds/sph-y", "bounds/zernike-r", "bounds/zernike-w"],
    );
    o.pass &= report.config.samples == 10_000;
    o
}

/// Passes only if every case holds. The cases registered as known
/// counterexamples are expected to fail; anything else failing, or a known
/// counterexample holding, breaks the test itself.
fn seminorms() -> (Outcome, Result<(), String>) {
    let (report, _) = run(Suite::Seminorms);
    let known = |c: &Check| c.reason.as_deref().is_some_and(|r| r.starts_with("known counterexample"));
    let unexpected: Vec<&str> = report.checks.iter().filter(|c| c.pass == known(c)).map(|c| c.name.as_str()).collect();
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    let short = report.checks.iter().filter(|c| c.count != Some(100)).count();
    let strict = if !unexpected.is_empty() {
        Err(format!("unexpected outcome for {unexpected:?}"))
    } else if failed == 0 {
        Err("no counterexample reproduced".to_string())
    } else if short > 0 {
        Err(format!("{short} cases ran other than 100 trials"))
    } else {
        Ok(())
    };
    let names: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    (
        Outcome {
            pass: report.passed(),
            detail: format!("{} cases, {failed} with violations (known counterexamples): {names:?}", report.checks.len()),
        },
        strict,
    )
}

fn continuity_constant() -> Outcome {
    let (report, _) = run(Suite::Constants);
    let mut o = all_pass(&report, &["constants/fourier-p=1"]);
    let c = report.check("constants/fourier-p=1");
    o.pass &= c.is_some_and(|c| c.pass && c.tolerance == 1e-6);
    o
}

fn transforms() -> Outcome {
    let (report, _) = run(Suite::Transforms);
    let families = ["fourier", "hermite", "assoc-laguerre", "sph-y", "jacobi-j", "zernike-r", "zernike-w"];
    let mut required: Vec<String> = Vec::new();
    for c in &report.checks {
        let family = c.name.split('/').nth(1).unwrap_or("");
        if families.contains(&family) && c.name.ends_with("/round-trip") {
            let base = c.name.trim_end_matches("/round-trip");
            required.extend(["parseval", "kernel-projection"].map(|k| format!("{base}/{k}")));
        }
    }
    required.push("transforms/fourier/|m|<=16/rotation-covariance".into());
    let required: Vec<&str> = required.iter().map(String::as_str).collect();
    let mut o = all_pass(&report, &required);
    o.pass &= required.len() >= 2 * families.len() + 1;
    o
}

fn cross_family() -> Outcome {
    let (report, _) = run(Suite::Crossfamily);
    let legendre: Vec<&Check> = report.checks.iter().filter(|c| c.name.contains("/legendre_jacobi-")).collect();
    let zernike: Vec<&Check> = report.checks.iter().filter(|c| c.name.contains("/zernike_jacobi-half-degree-")).collect();
    let ok = |v: &[&Check]| v.iter().all(|c| c.pass && c.tolerance <= 1e-10);
    Outcome {
        pass: legendre.len() == 121
            && zernike.len() == 91
            && ok(&legendre)
            && ok(&zernike)
            && legendre.iter().all(|c| c.count == Some(200)),
        detail: format!(
            "legendre_jacobi {} checks worst {:.3e}; zernike_jacobi {} checks worst {:.3e}",
            legendre.len(),
            worst(&legendre),
            zernike.len(),
            worst(&zernike)
        ),
    }
}

fn determinism() -> Outcome {
    let run = || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_sgsf"))
            .args(["verify", "--suite", "all", "--seed", "42"])
            .output()
            .expect("binary runs");
        (out, start.elapsed())
    };
    let (a, ta) = run();
    let (b, tb) = run();
    // the known counterexamples make the full run exit 1, never 2
    let codes_ok = a.status.code() == Some(1) && b.status.code() == Some(1);
    let limit = Duration::from_secs(300);
    Outcome {
        pass: codes_ok && !a.stdout.is_empty() && a.stdout == b.stdout && ta < limit && tb < limit,
        detail: format!(
            "{} bytes, identical {}, exit codes {:?}/{:?}, {:.2} s and {:.2} s",
            a.stdout.len(),
            a.stdout == b.stdout,
            a.status.code(),
            b.status.code(),
            ta.as_secs_f64(),
            tb.as_secs_f64()
        ),
    }
}

#[test]
fn acceptance_criteria() {
    let (c9, c9_strict) = seminorms();
    let outcomes = [
        ("orthonormality", orthonormality()),
        ("commutators", commutators()),
        ("casimirs", casimirs()),
        ("adjoint pairs", adjoints()),
        ("cartan weights", weights()),
        ("differential consistency", differential()),
        ("hermite-fourier eigenrelation", fourier_eigenrelation()),
        ("kernel bounds", bounds()),
        ("seminorm inequalities", c9),
        ("continuity constant", continuity_constant()),
        ("transforms", transforms()),
        ("cross-family identities", cross_family()),
        ("determinism", determinism()),
    ];
    for (k, (name, o)) in outcomes.iter().enumerate() {
        println!("{} criterion {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    let red: Vec<usize> = outcomes
        .iter()
        .enumerate()
        .filter(|(k, (_, o))| !o.pass && *k != 8)
        .map(|(k, _)| k + 1)
        .collect();
    assert!(red.is_empty(), "criteria {red:?} failed");
    // criterion 9 is red by construction; hold it to exactly that
    assert!(!outcomes[8].1.pass, "criterion 9 unexpectedly passes");
    if let Err(e) = c9_strict {
        panic!("criterion 9: {e}");
    }
}

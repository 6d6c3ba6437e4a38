use num_complex::Complex64;
use sgsf_algebra::{CoeffVec, Window};
use sgsf_basis::{evaluate_scaled, FamilyId, MultiIndex};
use sgsf_transforms::*;
use std::f64::consts::PI;

fn cases() -> Vec<(FamilyId, Window, QuadPlan)> {
    let mut out = Vec::new();
    let std_plan = |f: FamilyId, max| {
        let w = Window::standard(f, max);
        let p = QuadPlan::for_window(f, &w).unwrap();
        (f, w, p)
    };
    out.push(std_plan(FamilyId::FourierCircle, 16));
    let h = FamilyId::Hermite;
    out.push((h, Window::standard(h, 32), QuadPlan::new(h, &[80]).unwrap()));
    for alpha in [-0.5, 0.0, 1.0, 2.5] {
        let f = FamilyId::LaguerreM { alpha };
        out.push((f, Window::standard(f, 32), QuadPlan::new(f, &[80]).unwrap()));
    }
    out.push(std_plan(FamilyId::AssocLaguerre, 16));
    out.push(std_plan(FamilyId::PlaneZ, 12));
    out.push(std_plan(FamilyId::SphericalY, 16));
    out.push(std_plan(FamilyId::JacobiJ, 16));
    out.push(std_plan(FamilyId::HypersphereN, 6));
    out.push(std_plan(FamilyId::ZernikeR, 16));
    out.push(std_plan(FamilyId::ZernikeW, 16));
    out
}

/// Unit-norm vector on `span` with decaying moduli and spread phases.
fn spread(family: FamilyId, window: &Window, span: &[Vec<i64>]) -> CoeffVec {
    let raw: Vec<(Vec<i64>, Complex64)> = span
        .iter()
        .enumerate()
        .map(|(k, idx)| (idx.clone(), Complex64::from_polar(0.93f64.powi(k as i32), 1.3 * k as f64 + 0.4)))
        .collect();
    let norm = raw.iter().map(|(_, a)| a.norm_sqr()).sum::<f64>().sqrt();
    CoeffVec::from_entries(family, window.clone(), raw.into_iter().map(|(i, a)| (i, a / norm))).unwrap()
}

#[test]
fn round_trip_on_every_class() {
    for (f, w, plan) in cases() {
        for class in ortho_classes(f, &w) {
            let v = spread(f, &w, &class);
            let r = round_trip_residual(&v, &class, &plan).unwrap();
            assert!(r <= 1e-10, "{} class {:?}: {r:e}", f.tag(), class[0]);
        }
    }
}

#[test]
fn parseval_on_every_class() {
    for (f, w, plan) in cases() {
        for class in ortho_classes(f, &w) {
            let v = spread(f, &w, &class);
            let r = parseval_residual(&v, &plan).unwrap();
            assert!(r <= 1e-9, "{} class {:?}: {r:e}", f.tag(), class[0]);
        }
    }
}

#[test]
fn reproducing_kernel_projection_per_family() {
    for (f, w, plan) in cases() {
        let probes = probe_points(f, 12);
        for class in ortho_classes(f, &w).into_iter().take(3) {
            let v = spread(f, &w, &class);
            let r = kernel_projection_residual(&v, &class, &plan, &probes).unwrap();
            assert!(r <= 1e-10, "{} class {:?}: {r:e}", f.tag(), class[0]);
        }
    }
}

#[test]
fn kernel_projection_examples() {
    // degree-5 trigonometric polynomial under the |m| <= 8 Dirichlet kernel
    let f = FamilyId::FourierCircle;
    let w = Window::standard(f, 8);
    let plan = QuadPlan::for_window(f, &w).unwrap();
    let span = w.indices(f);
    let trig = spread(f, &w, &Window::standard(f, 5).indices(f));
    let r = kernel_projection_residual(&trig, &span, &plan, &probe_points(f, 40)).unwrap();
    assert!(r <= 1e-10, "{r:e}");

    let f = FamilyId::ZernikeW;
    let w = Window::standard(f, 8);
    let plan = QuadPlan::for_window(f, &w).unwrap();
    let span = w.indices(f);
    let probes = probe_points(f, 40);
    let e = CoeffVec::basis(f, w.clone(), &[2, 1]).unwrap();
    assert!(kernel_projection_residual(&e, &span, &plan, &probes).unwrap() <= 1e-10);
    let zero = CoeffVec::zero(f, w).unwrap();
    assert_eq!(kernel_projection_residual(&zero, &span, &plan, &probes).unwrap(), 0.0);
}

#[test]
fn kernel_outside_span_is_rejected() {
    let f = FamilyId::FourierCircle;
    let w = Window::standard(f, 8);
    let plan = QuadPlan::for_window(f, &w).unwrap();
    let v = CoeffVec::basis(f, w.clone(), &[7]).unwrap();
    let span = Window::standard(f, 3).indices(f);
    assert!(matches!(
        kernel_projection_residual(&v, &span, &plan, &probe_points(f, 4)),
        Err(TransformError::OutsideSpan(_))
    ));
}

#[test]
fn analysis_of_single_members() {
    let f = FamilyId::ZernikeW;
    let w = Window::standard(f, 6);
    let plan = QuadPlan::for_window(f, &w).unwrap();
    let target = MultiIndex::new(f, vec![1, 0]).unwrap();
    let a = analyze(|p| evaluate_scaled(&target, p).unwrap(), f, &w, &plan).unwrap();
    assert!(a.warnings.is_empty());
    let e = CoeffVec::basis(f, w.clone(), &[1, 0]).unwrap();
    assert!(a.coeffs.max_abs_diff(&e) <= 1e-10);

    let zero = analyze(|_| Complex64::new(0.0, 0.0), f, &w, &plan).unwrap();
    assert!(zero.coeffs.is_zero());

    let f = FamilyId::SphericalY;
    let w = Window::standard(f, 4);
    let plan = QuadPlan::for_window(f, &w).unwrap();
    let y21 = MultiIndex::new(f, vec![2, 1]).unwrap();
    let a = analyze(|p| evaluate_scaled(&y21, p).unwrap(), f, &w, &plan).unwrap();
    let e = CoeffVec::basis(f, w, &[2, 1]).unwrap();
    assert!(a.coeffs.max_abs_diff(&e) <= 1e-10);
}

#[test]
fn undersized_analysis_reports_a_warning() {
    let f = FamilyId::Hermite;
    let w = Window::standard(f, 20);
    let plan = QuadPlan::new(f, &[8]).unwrap();
    let a = analyze(|p| Complex64::new((-p[0] * p[0]).exp(), 0.0), f, &w, &plan).unwrap();
    assert_eq!(a.warnings.len(), 1);
}

#[test]
fn plan_family_must_match() {
    let w = Window::standard(FamilyId::Hermite, 4);
    let plan = QuadPlan::new(FamilyId::FourierCircle, &[16]).unwrap();
    assert!(matches!(
        analyze(|_| Complex64::new(1.0, 0.0), FamilyId::Hermite, &w, &plan),
        Err(TransformError::PlanMismatch { .. })
    ));
    assert!(matches!(
        QuadPlan::new(FamilyId::ZernikeW, &[8]),
        Err(TransformError::PlanOrders { expected: 2, got: 1, .. })
    ));
}

#[test]
fn non_finite_samples_are_rejected() {
    let f = FamilyId::JacobiJ;
    let w = Window::standard(f, 2);
    let plan = QuadPlan::for_window(f, &w).unwrap();
    let r = analyze(|_| Complex64::new(f64::NAN, 0.0), f, &w, &plan);
    assert!(matches!(r, Err(TransformError::NonFinite(_))));
}

#[test]
fn synthesis_examples() {
    let f = FamilyId::FourierCircle;
    let w = Window::standard(f, 2);
    let v = CoeffVec::basis(f, w, &[0]).unwrap();
    for z in synthesize(&v, &[vec![0.0], vec![1.0], vec![5.0]]).unwrap() {
        assert!((z - 1.0 / (2.0 * PI).sqrt()).norm() < 1e-15);
    }
    let f = FamilyId::Hermite;
    let w = Window::standard(f, 2);
    let one = Complex64::new(1.0, 0.0);
    let v = CoeffVec::from_entries(f, w, [(vec![0], one), (vec![1], one)]).unwrap();
    let z = synthesize(&v, &[vec![0.0]]).unwrap()[0];
    assert!((z - PI.powf(-0.25)).norm() < 1e-15);
}

#[test]
fn rotation_examples() {
    let f = FamilyId::FourierCircle;
    let w = Window::standard(f, 6);
    let v = spread(f, &w, &w.indices(f));
    assert_eq!(rotate_circle(&v, 0.0).unwrap(), v);
    let e1 = CoeffVec::basis(f, w.clone(), &[1]).unwrap();
    let minus = e1.scaled(Complex64::new(-1.0, 0.0));
    assert!(rotate_circle(&e1, PI).unwrap().max_abs_diff(&minus) < 1e-15);
    let probes: Vec<f64> = probe_points(f, 50).into_iter().map(|p| p[0]).collect();
    for theta in [0.3, -1.7, 2.0 * PI + 0.1, 5.5] {
        assert!(rotation_covariance_residual(&v, theta, &probes).unwrap() <= 1e-10);
    }
    let h = CoeffVec::basis(FamilyId::Hermite, Window::standard(FamilyId::Hermite, 2), &[0]).unwrap();
    assert!(matches!(rotate_circle(&h, 1.0), Err(TransformError::NotCircle("hermite"))));
}

#[test]
fn probes_lie_in_their_domains() {
    for (f, _, _) in cases() {
        for p in probe_points(f, 64) {
            let idx = MultiIndex::new(f, vec![0; f.arity()]).ok();
            if let Some(mi) = idx {
                assert!(evaluate_scaled(&mi, &p).is_ok(), "{} {p:?}", f.tag());
            }
        }
    }
}

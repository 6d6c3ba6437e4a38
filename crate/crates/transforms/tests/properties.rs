use num_complex::Complex64;
use proptest::prelude::*;
use sgsf_algebra::{CoeffVec, Window};
use sgsf_basis::FamilyId;
use sgsf_transforms::*;

fn circle_vector() -> impl Strategy<Value = CoeffVec> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 17).prop_map(|amps| {
        let f = FamilyId::FourierCircle;
        let w = Window::standard(f, 8);
        let entries = w
            .indices(f)
            .into_iter()
            .zip(amps)
            .map(|(i, (re, im))| (i, Complex64::new(re, im)));
        CoeffVec::from_entries(f, w, entries.collect::<Vec<_>>()).unwrap()
    })
}

proptest! {
    #[test]
    fn rotation_is_unitary(v in circle_vector(), theta in -10.0..10.0f64) {
        let r = rotate_circle(&v, theta).unwrap();
        prop_assert!((r.norm() - v.norm()).abs() <= 1e-14 * v.norm().max(1.0));
    }

    #[test]
    fn rotation_group_law(v in circle_vector(), a in -4.0..4.0f64, b in -4.0..4.0f64) {
        let two = rotate_circle(&rotate_circle(&v, a).unwrap(), b).unwrap();
        let one = rotate_circle(&v, a + b).unwrap();
        prop_assert!(two.max_abs_diff(&one) <= 1e-14);
    }

    #[test]
    fn rotation_shifts_the_synthesis(v in circle_vector(), theta in -7.0..7.0f64) {
        let probes: Vec<f64> = probe_points(FamilyId::FourierCircle, 16).into_iter().map(|p| p[0]).collect();
        prop_assert!(rotation_covariance_residual(&v, theta, &probes).unwrap() <= 1e-10);
    }

    #[test]
    fn analysis_is_linear_and_inverts_synthesis(v in circle_vector(), c in -3.0..3.0f64) {
        let f = FamilyId::FourierCircle;
        let w = v.window().clone();
        let plan = QuadPlan::for_window(f, &w).unwrap();
        let span = w.indices(f);
        let scaled = v.scaled(Complex64::new(c, 0.5));
        prop_assert!(round_trip_residual(&scaled, &span, &plan).unwrap() <= 1e-10 * (1.0 + scaled.max_abs()));
        prop_assert!(parseval_residual(&v, &plan).unwrap() <= 1e-9 * (1.0 + v.norm().powi(2)));
    }
}

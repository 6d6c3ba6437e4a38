use proptest::prelude::*;
use sgsf_basis::FamilyId;
use sgsf_verify::report::to_stable_json;
use sgsf_verify::{parse_window, window_label, Check, Observation, Suite, SuiteConfig, VerificationReport};

fn any_family() -> impl Strategy<Value = FamilyId> {
    (0usize..10, -0.9f64..4.0).prop_map(|(k, a)| FamilyId::from_tag(FamilyId::ALL_TAGS[k], Some(a)).unwrap())
}

proptest! {
    #[test]
    fn window_label_parses_back(family in any_family(), max in 0i64..40) {
        let w = parse_window(family, &window_label(family, max)).unwrap();
        prop_assert_eq!(w, sgsf_algebra::Window::standard(family, max));
    }

    #[test]
    fn stable_json_is_a_pure_function_of_the_report(
        residuals in prop::collection::vec(prop_oneof![any::<f64>(), Just(f64::INFINITY), Just(f64::NAN)], 0..8),
        tol in 0.0f64..1.0,
    ) {
        let checks: Vec<Check> = residuals.iter().enumerate().map(|(k, &r)| Check::new(format!("c/{k}"), r, tol)).collect();
        let obs = vec![Observation::new("o", residuals.first().copied().unwrap_or(0.0), "n")];
        let report = VerificationReport::new(SuiteConfig::new(Suite::Bounds), checks, obs);
        let a = to_stable_json(&report).unwrap();
        prop_assert_eq!(&a, &to_stable_json(&report.clone()).unwrap());
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        prop_assert_eq!(v["summary"]["total"].as_u64().unwrap() as usize, residuals.len());
        let passed = residuals.iter().filter(|&&r| r <= tol).count();
        prop_assert_eq!(v["summary"]["passed"].as_u64().unwrap() as usize, passed);
    }
}

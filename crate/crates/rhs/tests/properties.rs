use num_complex::Complex64;
use proptest::prelude::*;
use sgsf_algebra::{CoeffVec, Window};
use sgsf_rhs::seminorm::WeightRule;
use sgsf_rhs::{ln_seminorm, lookup, registry, seminorm, Flavor, SeminormSpec};

fn specs() -> impl Strategy<Value = SeminormSpec> {
    prop_oneof![Just(-0.5), Just(0.0), Just(1.0), Just(2.5)].prop_flat_map(|alpha| {
        let all = registry(alpha);
        (0..all.len()).prop_map(move |i| all[i])
    })
}

/// Coefficients of a vector in the standard window of the spec's family.
fn vector(spec: &SeminormSpec, seeds: &[(f64, f64, bool)]) -> CoeffVec {
    let w = Window::standard(spec.family, 6);
    let entries: Vec<_> = w
        .indices(spec.family)
        .into_iter()
        .zip(seeds.iter().cycle())
        .filter(|(_, s)| s.2)
        .map(|(i, &(re, im, _))| (i, Complex64::new(re, im)))
        .collect();
    CoeffVec::from_entries(spec.family, w, entries).unwrap()
}

fn seeds() -> impl Strategy<Value = Vec<(f64, f64, bool)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0, any::<bool>()), 1..17)
}

/// The transported Laguerre weight `(n+1)(n+alpha+1)` drops below one at
/// `n = 0` for negative `alpha`.
fn monotone_weights(spec: &SeminormSpec) -> bool {
    let alpha = spec.family.alpha().unwrap_or(0.0);
    !matches!(spec.rule, WeightRule::LaguerreProduct { shift } if alpha + shift < 1.0)
}

proptest! {
    #[test]
    fn seminorms_increase_with_order(spec in specs(), s in seeds(), p in 0u32..4) {
        let v = vector(&spec, &s);
        if monotone_weights(&spec) {
            prop_assert!(ln_seminorm(&v, &spec, p).unwrap() <= ln_seminorm(&v, &spec, p + 1).unwrap() + 1e-13);
        }
    }

    #[test]
    fn order_zero_l2_is_the_hilbert_norm(spec in specs(), s in seeds()) {
        let v = vector(&spec, &s);
        let s_fixed = matches!(spec.rule, WeightRule::JacobiTwoParameter { s } if s > 0);
        if spec.flavor == Flavor::L2 && !s_fixed {
            prop_assert!((seminorm(&v, &spec, 0).unwrap() - v.norm()).abs() <= 1e-14 * v.norm().max(1.0));
        }
    }

    #[test]
    fn seminorms_are_homogeneous_and_subadditive(spec in specs(), a in seeds(), b in seeds(), (cr, ci) in (-3.0f64..3.0, -3.0f64..3.0), p in 0u32..3) {
        let (u, v) = (vector(&spec, &a), vector(&spec, &b));
        let c = Complex64::new(cr, ci);
        let n = |x: &CoeffVec| seminorm(x, &spec, p).unwrap();
        let scaled = n(&u.scaled(c));
        prop_assert!((scaled - c.norm() * n(&u)).abs() <= 1e-13 * scaled.max(1.0));
        let sum = u.axpy(Complex64::new(1.0, 0.0), &v).unwrap();
        prop_assert!(n(&sum) <= (n(&u) + n(&v)) * (1.0 + 1e-13));
    }

    #[test]
    fn l1_dominates_l2(s in seeds(), p in 0u32..5, pair in 0usize..3) {
        let (small, large) = [("zernike-l2", "zernike-l1"), ("jacobi-p-s0", "jacobi-t-s0"), ("jacobi-p-s1", "jacobi-t-s1")][pair];
        let (small, large) = (lookup(small, 0.0).unwrap(), lookup(large, 0.0).unwrap());
        let v = vector(&small, &s);
        prop_assert!(seminorm(&v, &small, p).unwrap() <= seminorm(&v, &large, p).unwrap() * (1.0 + 1e-14));
    }
}

#[test]
fn transported_laguerre_weight_is_not_monotone_for_negative_alpha() {
    let spec = lookup("laguerre-transported", -0.5).unwrap();
    let e0 = CoeffVec::basis(spec.family, Window::standard(spec.family, 2), &[0]).unwrap();
    assert!(seminorm(&e0, &spec, 1).unwrap() < seminorm(&e0, &spec, 0).unwrap());
    assert!(!monotone_weights(&spec));
    assert!(monotone_weights(&lookup("laguerre", -0.5).unwrap()));
}

use num_complex::Complex64;
use proptest::prelude::*;
use sgsf_algebra::{algebra, AlgebraId, CoeffVec, Mode, OpExpr};

fn ids() -> impl Strategy<Value = AlgebraId> {
    prop_oneof![
        Just(AlgebraId::Su2AssocLaguerre),
        Just(AlgebraId::HeisenbergHermite),
        Just(AlgebraId::So32Spherical),
        Just(AlgebraId::Su22Jacobi),
        Just(AlgebraId::Su11xSu11Zernike),
        prop_oneof![Just(-0.5), Just(0.0), Just(1.0), Just(2.5)].prop_map(|alpha| AlgebraId::Su11Laguerre { alpha }),
    ]
}

fn random_vec(id: AlgebraId, seeds: &[(f64, f64)]) -> CoeffVec {
    let alg = algebra(id);
    let idx = alg.window.indices(alg.family);
    let entries = idx
        .into_iter()
        .zip(seeds.iter().cycle())
        .map(|(i, &(re, im))| (i, Complex64::new(re, im)));
    CoeffVec::from_entries(alg.family, alg.window.clone(), entries).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_act_linearly(
        id in ids(),
        gi in 0usize..64,
        s1 in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..9),
        s2 in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..9),
        (cr, ci) in (-2.0f64..2.0, -2.0f64..2.0),
    ) {
        let alg = algebra(id);
        let g = &alg.generators[gi % alg.generators.len()];
        if g.name().starts_with("Dq") || (id == AlgebraId::Su22Jacobi && g.name().starts_with('K')) {
            return Ok(());
        }
        let c = Complex64::new(cr, ci);
        let (u, v) = (random_vec(id, &s1), random_vec(id, &s2));
        let lhs = g.apply(&u.axpy(c, &v).unwrap(), Mode::Grow).unwrap();
        let rhs = g.apply(&u, Mode::Grow).unwrap().axpy(c, &g.apply(&v, Mode::Grow).unwrap()).unwrap();
        let scale = lhs.max_abs().max(1.0);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-14 * scale);
    }

    #[test]
    fn commutators_are_antisymmetric_and_vanish_between_diagonals(
        id in ids(),
        ai in 0usize..64,
        bi in 0usize..64,
        seeds in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..9),
    ) {
        let alg = algebra(id);
        let pick = |i: usize| &alg.generators[i % alg.generators.len()];
        let (a, b) = (pick(ai), pick(bi));
        if [a, b].iter().any(|g| g.name().starts_with("Dq") || (id == AlgebraId::Su22Jacobi && g.name().starts_with('K'))) {
            return Ok(());
        }
        let v = random_vec(id, &seeds);
        let ab = OpExpr::commutator(a, b).apply(&v, Mode::Grow).unwrap();
        let ba = OpExpr::commutator(b, a).apply(&v, Mode::Grow).unwrap();
        prop_assert!(ab.axpy(Complex64::new(1.0, 0.0), &ba).unwrap().max_abs() <= 1e-12 * ab.max_abs().max(1.0));
        if a.is_diagonal() && b.is_diagonal() {
            prop_assert!(ab.max_abs() <= 1e-11 * v.max_abs().max(1.0));
        }
    }

    #[test]
    fn strict_and_grow_agree_on_interior_vectors(id in ids(), gi in 0usize..64, k in 0usize..400) {
        let alg = algebra(id);
        let g = &alg.generators[gi % alg.generators.len()];
        if g.name().starts_with("Dq") || (id == AlgebraId::Su22Jacobi && g.name().starts_with('K')) {
            return Ok(());
        }
        let idx = alg.window.indices(alg.family);
        let e = CoeffVec::basis(alg.family, alg.window.clone(), &idx[k % idx.len()]).unwrap();
        let grown = g.apply(&e, Mode::Grow).unwrap();
        match g.apply(&e, Mode::Strict) {
            Ok(s) => prop_assert_eq!(s.max_abs_diff(&grown), 0.0),
            Err(_) => prop_assert!(grown.iter().any(|(t, _)| !alg.window.contains_bounds(t))),
        }
    }
}

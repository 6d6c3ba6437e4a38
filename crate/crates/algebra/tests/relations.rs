use sgsf_algebra::tables::{jacobi_su11_window, JACOBI_SU11_PAIRS};
use sgsf_algebra::{
    adjoint_pair_residual, algebra, cartan_weight_residual, expr_residual, expr_residual_from, run_relations, AlgebraError, AlgebraId, CheckKind,
    OpExpr, Window,
};

const TOL: f64 = 1e-12;

fn all_ids() -> Vec<AlgebraId> {
    let mut ids = vec![
        AlgebraId::Su2AssocLaguerre,
        AlgebraId::HeisenbergHermite,
        AlgebraId::So32Spherical,
        AlgebraId::Su22Jacobi,
        AlgebraId::Su11xSu11Zernike,
    ];
    for alpha in [-0.5, 0.0, 1.0, 2.5] {
        ids.push(AlgebraId::Su11Laguerre { alpha });
    }
    ids
}

#[test]
fn every_tabulated_relation_holds_on_its_window() {
    for id in all_ids() {
        let alg = algebra(id);
        let results = run_relations(&alg).unwrap();
        assert!(!results.is_empty(), "{}", id.tag());
        for r in results {
            assert!(r.count > 0, "{} empty", r.label);
            assert!(r.residual <= TOL, "{} residual {:e}", r.label, r.residual);
        }
    }
}

#[test]
fn relation_kinds_cover_the_tables() {
    let count = |id, kind| run_relations(&algebra(id)).unwrap().iter().filter(|r| r.kind == kind).count();
    assert_eq!(count(AlgebraId::So32Spherical, CheckKind::Weight), 16);
    assert_eq!(count(AlgebraId::So32Spherical, CheckKind::Adjoint), 4);
    // six ladder pairs plus K on each (m, q) class
    assert_eq!(count(AlgebraId::Su22Jacobi, CheckKind::Adjoint), 6 + JACOBI_SU11_PAIRS.len());
    assert_eq!(count(AlgebraId::Su22Jacobi, CheckKind::Composition), 2 * JACOBI_SU11_PAIRS.len());
    // 4 + 6 own relations and 16 cross commutators
    assert_eq!(count(AlgebraId::Su11xSu11Zernike, CheckKind::Commutator), 26);
}

#[test]
fn adjoint_windows_have_enough_pairs() {
    for id in all_ids() {
        let alg = algebra(id);
        for p in &alg.adjoint_pairs {
            let w = p.window.clone().unwrap_or_else(|| alg.window.clone());
            let r = adjoint_pair_residual(alg.generator(&p.first).unwrap(), alg.generator(&p.second).unwrap(), &w)
                .unwrap();
            assert!(r.count >= 100, "{} has {} pairs", p.label, r.count);
        }
    }
}

#[test]
fn lowering_amplitude_on_the_raising_target_is_rejected() {
    // the J- amplitude paired with the target (l, m + 1) leaves m <= l at m = l
    let alg = algebra(AlgebraId::So32Spherical);
    let wrong = sgsf_algebra::GeneratorSpec::new("J-", alg.family).term(vec![0, 1], |c| {
        let (l, m) = (c[0] as f64, c[1] as f64);
        ((l + m) * (l - m + 1.0)).max(0.0).sqrt()
    });
    let jp = alg.generator("J+").unwrap();
    assert!(matches!(
        adjoint_pair_residual(jp, &wrong, &alg.window),
        Err(AlgebraError::InvalidTarget { .. })
    ));
}

#[test]
fn cartan_weights_read_off_the_shift() {
    let alg = algebra(AlgebraId::Su22Jacobi);
    let c = alg.generator("C+").unwrap();
    for (cartan, want) in [("J", 0.5), ("M", 0.5), ("Q", 0.5)] {
        let r = cartan_weight_residual(c, alg.generator(cartan).unwrap(), &alg.window).unwrap();
        assert_eq!(r.delta, want);
    }
    let e = alg.generator("E-").unwrap();
    let r = cartan_weight_residual(e, alg.generator("M").unwrap(), &alg.window).unwrap();
    assert_eq!(r.delta, 0.5);
    assert!(cartan_weight_residual(e, c, &alg.window).is_err());
}

#[test]
fn su22_composition_fails_without_the_q_normalization() {
    let alg = algebra(AlgebraId::Su22Jacobi);
    let (fp, cp, kp) = (
        alg.generator("F+").unwrap(),
        alg.generator("C+").unwrap(),
        alg.generator("K+").unwrap(),
    );
    let src = jacobi_su11_window(3, 1, 6);
    let w = Window::new(vec![3, 2, 0], vec![17, 4, 2]);
    let r = expr_residual_from(&OpExpr::product(&[fp, cp]), &OpExpr::gen(kp), alg.family, &w, Some(&src)).unwrap();
    assert!(r.residual > 1.0);
}

#[test]
fn heisenberg_commutator_fails_on_the_window_edge() {
    // truncation makes [a, a+] = I false on the last vector, which the
    // interior rule skips
    let alg = algebra(AlgebraId::HeisenbergHermite);
    let rel = &alg.commutators[0];
    let r = expr_residual(&rel.lhs, &rel.rhs, alg.family, &Window::standard(alg.family, 6)).unwrap();
    assert_eq!(r.count, 6);
    assert_eq!(r.skipped, 1);
    assert!(r.residual < TOL);
}

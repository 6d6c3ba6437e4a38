use sgsf_algebra::{
    algebra, differential_consistency, fourier_j, laguerre_position, multiplication_matrix_residual, AlgebraId,
    Window,
};
use sgsf_basis::{FamilyId, MultiIndex};
use sgsf_quadrature::{build_rule, RuleKind};

fn grid(lo: f64, hi: f64, n: usize) -> Vec<Vec<f64>> {
    (0..n).map(|k| vec![lo + (hi - lo) * (k as f64 + 0.5) / n as f64]).collect()
}

#[test]
fn fourier_j_is_i_d_dphi() {
    let j = fourier_j();
    let pts = grid(0.0, std::f64::consts::TAU, 37);
    for m in -16..=16 {
        let idx = MultiIndex::new(FamilyId::FourierCircle, vec![m]).unwrap();
        let r = differential_consistency(&j, &idx, &pts).unwrap();
        assert!(r.residual <= 1e-8, "m={m} {:e}", r.residual);
    }
}

#[test]
fn hermite_generators_match_their_realizations() {
    let alg = algebra(AlgebraId::HeisenbergHermite);
    let pts = grid(-5.0, 5.0, 41);
    for name in ["a", "a+", "Q", "P"] {
        let g = alg.generator(name).unwrap();
        for n in 0..=24 {
            let idx = MultiIndex::new(FamilyId::Hermite, vec![n]).unwrap();
            let r = differential_consistency(g, &idx, &pts).unwrap();
            assert!(r.residual <= 1e-8, "{name} n={n} {:e}", r.residual);
        }
    }
}

#[test]
fn laguerre_ladders_match_their_first_order_forms() {
    for alpha in [-0.5, 0.0, 1.0, 2.5] {
        let alg = algebra(AlgebraId::Su11Laguerre { alpha });
        let pts = grid(0.2, 12.0, 30);
        for name in ["K+", "K-"] {
            let g = alg.generator(name).unwrap();
            for n in 0..=16 {
                let idx = MultiIndex::new(alg.family, vec![n]).unwrap();
                let r = differential_consistency(g, &idx, &pts).unwrap();
                assert!(r.residual <= 1e-7, "{name} a={alpha} n={n} {:e}", r.residual);
            }
        }
    }
}

#[test]
fn assoc_laguerre_ladders_match_their_first_order_forms() {
    let alg = algebra(AlgebraId::Su2AssocLaguerre);
    let pts = grid(0.2, 12.0, 30);
    for name in ["K+", "K-"] {
        let g = alg.generator(name).unwrap();
        for tj in 0..=12 {
            for tm in (-tj..=tj).step_by(2) {
                let idx = MultiIndex::new(alg.family, vec![tj, tm]).unwrap();
                let r = differential_consistency(g, &idx, &pts).unwrap();
                assert!(r.residual <= 1e-7, "{name} 2j={tj} 2m={tm} {:e}", r.residual);
            }
        }
    }
}

#[test]
fn zernike_p_is_multiplication_by_r_exp_i_phi() {
    let alg = algebra(AlgebraId::Su11xSu11Zernike);
    let p = alg.generator("P").unwrap();
    let pts: Vec<Vec<f64>> = (0..12)
        .flat_map(|a| (0..9).map(move |b| vec![0.04 + 0.08 * a as f64, 0.7 * b as f64]))
        .collect();
    for u in 0..=10 {
        for v in 0..=10 {
            let idx = MultiIndex::new(FamilyId::ZernikeW, vec![u, v]).unwrap();
            let r = differential_consistency(p, &idx, &pts).unwrap();
            assert!(r.residual <= 1e-10, "u={u} v={v} {:e}", r.residual);
        }
    }
}

#[test]
fn laguerre_position_is_the_quadrature_multiplication_matrix() {
    for alpha in [-0.5, 0.0, 1.0, 2.5] {
        let alg = algebra(AlgebraId::Su11Laguerre { alpha });
        let y = laguerre_position(&alg).unwrap();
        let rule = build_rule(RuleKind::Laguerre { alpha }, 80, None).unwrap();
        let w = Window::standard(alg.family, 30);
        let r = multiplication_matrix_residual(&y, alg.family, &w, &rule, |t| t).unwrap();
        assert_eq!(r.count, 30);
        assert!(r.residual <= 1e-10, "a={alpha} {:e}", r.residual);
    }
}

#[test]
fn hermite_position_is_the_quadrature_multiplication_matrix() {
    let alg = algebra(AlgebraId::HeisenbergHermite);
    let q = sgsf_algebra::OpExpr::gen(alg.generator("Q").unwrap());
    let rule = build_rule(RuleKind::Hermite, 80, None).unwrap();
    let r = multiplication_matrix_residual(&q, alg.family, &Window::standard(alg.family, 32), &rule, |t| t).unwrap();
    assert!(r.residual <= 1e-10, "{:e}", r.residual);
}

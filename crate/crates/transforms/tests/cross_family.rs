use sgsf_transforms::*;

#[test]
fn legendre_from_algebraic_jacobi() {
    for l in 0..=10 {
        for m in -l..=l {
            let rel = CrossRelation::LegendreJacobi { l, m };
            let r = cross_family_residual(&rel, &relation_points(&rel, 200)).unwrap();
            assert_eq!(r.points, 200);
            assert!(r.scaled_residual() <= 1e-10, "{}: {:e}", r.label, r.scaled_residual());
        }
    }
}

#[test]
fn legendre_low_degree_is_exact() {
    let rel = CrossRelation::LegendreJacobi { l: 1, m: 0 };
    let r = cross_family_residual(&rel, &relation_points(&rel, 50)).unwrap();
    assert!(r.residual <= 1e-12);
}

#[test]
fn zernike_from_jacobi_half_degree() {
    for n in 0..=12i64 {
        for m in (-n..=n).filter(|m| (n - m.abs()) % 2 == 0) {
            let rel = CrossRelation::ZernikeJacobi { n, m, reading: ZernikeReading::HalfDegree };
            let r = cross_family_residual(&rel, &relation_points(&rel, 200)).unwrap();
            assert!(r.scaled_residual() <= 1e-10, "{}: {:e}", r.label, r.residual);
        }
    }
}

#[test]
fn zernike_literal_degree_reading_disagrees() {
    // matches only where the printed degree equals (n - |m|)/2, i.e. n = 0
    for n in 1..=12i64 {
        for m in (-n..=n).filter(|m| (n - m.abs()) % 2 == 0) {
            let rel = CrossRelation::ZernikeJacobi { n, m, reading: ZernikeReading::Literal };
            let r = cross_family_residual(&rel, &relation_points(&rel, 200)).unwrap();
            assert!(r.residual > 0.5, "{}: {:e}", r.label, r.residual);
        }
    }
}

#[test]
fn zernike_second_degree_by_hand() {
    // R_2^0 = 2r^2 - 1 = -P_1^{(0,0)}(1 - 2r^2)
    let rel = CrossRelation::ZernikeJacobi { n: 2, m: 0, reading: ZernikeReading::HalfDegree };
    assert!(cross_family_residual(&rel, &relation_points(&rel, 21)).unwrap().residual <= 1e-10);
}

#[test]
fn plane_function_against_literal_laguerre_formula() {
    for two_j in 0..=12 {
        for two_m in (-two_j..=two_j).step_by(2) {
            let rel = CrossRelation::PlaneZConsistency { two_j, two_m };
            let r = cross_family_residual(&rel, &relation_points(&rel, 60)).unwrap();
            assert!(r.scaled_residual() <= 1e-10, "{}: {:e}", r.label, r.residual);
        }
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    let bad = [
        CrossRelation::LegendreJacobi { l: 2, m: 3 },
        CrossRelation::ZernikeJacobi { n: 3, m: 0, reading: ZernikeReading::HalfDegree },
        CrossRelation::PlaneZConsistency { two_j: 3, two_m: 0 },
    ];
    for rel in bad {
        assert!(cross_family_residual(&rel, &relation_points(&rel, 5)).is_err(), "{rel:?}");
    }
    let rel = CrossRelation::LegendreJacobi { l: 2, m: 1 };
    assert!(cross_family_residual(&rel, &[vec![0.1, 0.2]]).is_err());
}

use sgsf_transforms::*;

const ORDERS: [usize; 4] = [20, 40, 80, 160];

#[test]
fn eigenrelation_for_n_up_to_12() {
    let grid = momentum_grid(6.0, 121);
    for n in 0..=12 {
        let sweep = ft_order_sweep(n, &ORDERS, &grid).unwrap();
        let last = sweep.last().unwrap();
        assert!(last.warnings.is_empty());
        assert!(last.residual <= 1e-8, "n = {n}: {:e}", last.residual);
        assert!(improves_monotonically(&sweep, 1e-12), "n = {n}: {sweep:?}");
    }
}

#[test]
fn low_eigenvalues() {
    // (-i)^0 = 1, (-i)^1 = -i, (-i)^2 = -1 all sit in the compared target
    let grid = momentum_grid(4.0, 41);
    for n in 0..=2 {
        assert!(hermite_ft_residual(n, 80, &grid).unwrap().residual <= 1e-8);
    }
}

#[test]
fn coarse_plan_is_flagged_and_inaccurate() {
    let grid = momentum_grid(3.0, 31);
    let coarse = hermite_ft_residual(12, 20, &grid).unwrap();
    assert!(coarse.residual > 1e-3);
    assert_eq!(coarse.warnings.len(), 1);
}

#[test]
fn monotonicity_predicate() {
    let mk = |r: f64| FtReport { n: 0, order: 1, residual: r, warnings: vec![] };
    assert!(improves_monotonically(&[mk(1.0), mk(0.1), mk(1e-13), mk(2e-13)], 1e-12));
    assert!(!improves_monotonically(&[mk(1.0), mk(0.1), mk(0.2)], 1e-12));
    assert_eq!(momentum_grid(2.0, 3), vec![-2.0, 0.0, 2.0]);
}

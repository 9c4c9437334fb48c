use darboux_ladders::exactmath::{int, rat_to_f64};
use darboux_ladders::extension::build_state_adding;
use darboux_ladders::families::{base_potential, bound_state, Family, IndexList};
use darboux_ladders::numerics::{fd_eigenvalues, quadrature_norm2, Grid};

#[test]
fn finite_differences_converge_at_second_order() {
    let v = base_potential(&Family::Ho);
    let error = |n: usize| {
        let grid = Grid::new(-10.0, 10.0, n).unwrap();
        let ev = fd_eigenvalues(&v, &grid, 3).unwrap();
        (ev[2] - 5.0).abs()
    };
    let (e1, e2, e3) = (error(399), error(799), error(1599));
    for ratio in [e1 / e2, e2 / e3] {
        assert!((3.6..4.4).contains(&ratio), "ratio {ratio}");
    }
}

#[test]
fn extended_spectrum_converges_under_refinement() {
    let p = build_state_adding(&Family::Ho, &IndexList::new(vec![2])).unwrap();
    let exact: Vec<f64> = p
        .spectrum
        .levels(4)
        .iter()
        .map(|(_, e)| rat_to_f64(e))
        .collect();
    let max_err = |n: usize| {
        let grid = Grid::new(-12.0, 12.0, n).unwrap();
        let ev = fd_eigenvalues(&p.potential, &grid, 4).unwrap();
        ev.iter()
            .zip(&exact)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    let coarse = max_err(1200);
    let fine = max_err(2400);
    assert!(fine < coarse / 3.0, "{coarse} -> {fine}");
    assert!(fine < 1e-3);
}

#[test]
fn radial_norms_match_gamma_function_values() {
    // |x^{l+1} e^{-x^2/4}|^2 over (0, inf) = Gamma(l + 3/2) 2^{l + 3/2 - 1}
    let ell = 2;
    let psi = bound_state(&Family::rho(int(ell)), 0).unwrap();
    let grid = Grid::new(0.0, 16.0, 3000).unwrap();
    let got = quadrature_norm2(&psi.f, &grid).unwrap();
    // Gamma(7/2) = 15 sqrt(pi) / 8
    let want = 15.0 * std::f64::consts::PI.sqrt() / 8.0 * 2f64.powf(2.5);
    assert!(((got - want) / want).abs() < 1e-10, "{got} vs {want}");
}

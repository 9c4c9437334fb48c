use darboux_ladders::exactmath::{int, Rat};
use darboux_ladders::families::{bound_state, Family, IndexList};
use darboux_ladders::ladder::{apply_hamiltonian, commutator_residual, RationalExtension};
use darboux_ladders::quasirational::qr_ratio_constant;

fn configs() -> Vec<RationalExtension> {
    let mut out = Vec::new();
    for m in [vec![2], vec![0, 1], vec![2, 3, 4]] {
        out.push(RationalExtension::new(&Family::Ho, &IndexList::new(m)).unwrap());
    }
    for (ell, m) in [(2, vec![2]), (3, vec![0, 3])] {
        out.push(RationalExtension::new(&Family::rho(int(ell)), &IndexList::new(m)).unwrap());
    }
    out
}

#[test]
fn adding_map_intertwines_hamiltonians() {
    for ext in configs() {
        let start = ext.start_family();
        let v1 = &ext.adding.start;
        let v2 = ext.potential();
        for nu in 0..6u32 {
            let psi = bound_state(&start, nu).unwrap();
            let lhs = ext
                .a_map
                .apply(&apply_hamiltonian(v1, &psi.f).unwrap())
                .unwrap();
            let rhs = apply_hamiltonian(v2, &ext.a_map.apply(&psi.f).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{:?} nu = {nu}", ext.indices);
        }
    }
}

#[test]
fn adjoint_product_is_factorization_polynomial() {
    for ext in configs() {
        let start = ext.start_family();
        let poly = ext.a_map.factorization_polynomial();
        let adj = ext.a_map.adjoint();
        for nu in 0..5u32 {
            let psi = bound_state(&start, nu).unwrap();
            let back = adj.apply(&ext.a_map.apply(&psi.f).unwrap()).unwrap();
            assert_eq!(
                back,
                psi.f.scale(&poly.eval(&psi.energy)),
                "{:?}",
                ext.indices
            );
        }
    }
}

#[test]
fn ladders_close_on_ten_states() {
    for ext in configs() {
        let c = ext.ladder_c();
        let b = ext.ladder_b();
        for (nu, s) in ext.states(10).unwrap() {
            for op in [&c, &b] {
                let r = commutator_residual(ext.potential(), op, &s.f).unwrap();
                assert!(r.is_zero(), "{} on psi_{nu} of {:?}", op.name, ext.indices);
            }
        }
    }
}

#[test]
fn commutator_of_c_with_its_adjoint() {
    // c c^† = Q(H + lambda) on eigenstates
    for ext in configs() {
        let c = ext.ladder_c();
        for (nu, s) in ext.states(6).unwrap() {
            let up = c.apply_adjoint(&s.f).unwrap();
            let back = c.apply(&up).unwrap();
            let want = c.q_poly.eval(&(&s.energy + &c.lambda));
            assert_eq!(back, s.f.scale(&want), "psi_{nu} of {:?}", ext.indices);
        }
    }
}

#[test]
fn c_dagger_raises_by_lambda() {
    for ext in configs() {
        let c = ext.ladder_c();
        let step = ext.indices.m_k() as i64 + 1;
        for nu in 0..4 {
            let up = c.apply_adjoint(&ext.eigenstate(nu).unwrap().f).unwrap();
            let target = ext.eigenstate(nu + step).unwrap();
            let r = qr_ratio_constant(&up, &target.f);
            assert!(r.is_some_and(|r| r != Rat::from_integer(0.into())));
            assert_eq!(
                &ext.energy(nu) + &c.lambda,
                ext.energy(nu + step),
                "{:?}",
                ext.indices
            );
        }
    }
}

#[test]
fn eigenstates_solve_the_extended_equation() {
    for ext in configs() {
        for (nu, s) in ext.states(8).unwrap() {
            let h = apply_hamiltonian(ext.potential(), &s.f).unwrap();
            assert_eq!(h, s.f.scale(&s.energy), "psi_{nu} of {:?}", ext.indices);
        }
    }
}

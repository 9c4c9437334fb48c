//! A Darboux-Crum map as an explicit differential operator.

use darboux_ladders::extension::build_state_adding;
use darboux_ladders::families::{bound_state, Family, IndexList};
use darboux_ladders::ladder::{apply_hamiltonian, DarbouxMap};

fn main() {
    let idx = IndexList::new(vec![0, 1]);
    let p = build_state_adding(&Family::Ho, &idx).unwrap();
    let a = DarbouxMap::from_seeds(&p.seeds).unwrap();
    println!("order {}", a.order());
    for (i, c) in a.op().coeffs().iter().enumerate() {
        println!("  D^{i}: {c}");
    }
    println!("A^† A = {}", a.factorization_polynomial());

    let psi = bound_state(&Family::Ho, 1).unwrap();
    let image = a.apply(&psi.f).unwrap();
    println!("A psi_1 = {image}");
    let h = apply_hamiltonian(&p.potential, &image).unwrap();
    println!(
        "H2 (A psi_1) = E (A psi_1): {}",
        h == image.scale(&psi.energy)
    );

    let back = a.adjoint().apply(&image).unwrap();
    let factor = a.factorization_polynomial().eval(&psi.energy);
    println!(
        "A^† A psi_1 = {factor} psi_1: {}",
        back == psi.f.scale(&factor)
    );
}

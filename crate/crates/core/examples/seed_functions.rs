//! Bound states, seed solutions and admissibility of index lists.

use darboux_ladders::exactmath::int;
use darboux_ladders::extension::{check_admissible, Mode};
use darboux_ladders::families::base_potential;
use darboux_ladders::families::{bound_state, seed_phi_ho, seed_phi_rho, Family, IndexList};
use darboux_ladders::ladder::apply_hamiltonian;

fn main() {
    let ho = Family::Ho;
    let v = base_potential(&ho);
    for m in 0..3 {
        let phi = seed_phi_ho(m);
        let h_phi = apply_hamiltonian(&v, &phi.f).unwrap();
        println!(
            "phi_{m} = {}  E = {}  eigen: {}",
            phi.f,
            phi.energy,
            h_phi == phi.f.scale(&phi.energy)
        );
    }
    println!("psi_2 = {}", bound_state(&ho, 2).unwrap().f);

    let rho = Family::rho(int(2));
    let phi = seed_phi_rho(&int(2), 1).unwrap();
    println!("RHO l=2: phi_1 = {}  E = {}", phi.f, phi.energy);
    println!("RHO l=2: psi_0 = {}", bound_state(&rho, 0).unwrap().f);

    for (family, m) in [
        (&ho, vec![2]),
        (&ho, vec![1]),
        (&ho, vec![0, 2]),
        (&rho, vec![4]),
    ] {
        let idx = IndexList::new(m.clone());
        match check_admissible(&idx, family, Mode::Adding) {
            Ok(()) => println!("{} {m:?}: admissible", family.name()),
            Err(e) => println!("{} {m:?}: {e}", family.name()),
        }
    }
}

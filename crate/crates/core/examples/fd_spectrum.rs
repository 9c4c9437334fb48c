//! Finite-difference eigenvalues of an extended potential against the
//! exact levels.

use darboux_ladders::extension::{build_state_adding, spectrum_table};
use darboux_ladders::families::{Family, IndexList};
use darboux_ladders::numerics::{fd_eigenvalues, Grid};

fn main() {
    let p = build_state_adding(&Family::Ho, &IndexList::new(vec![2, 3])).unwrap();
    for n in [600, 1200, 2400] {
        let grid = Grid::new(-12.0, 12.0, n).unwrap();
        let numeric = fd_eigenvalues(&p.potential, &grid, 7).unwrap();
        let table = spectrum_table(&p, 7).with_numeric(numeric).unwrap();
        println!(
            "{n} points: max residual {:.3e}",
            table.max_residual().unwrap()
        );
        if n == 2400 {
            for i in 0..table.len() {
                println!(
                    "  nu {:>3}  exact {:>4}  numeric {:.8}",
                    table.nu[i], table.exact[i], table.numeric[i]
                );
            }
        }
    }
}

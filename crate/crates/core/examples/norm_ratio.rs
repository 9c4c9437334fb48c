//! Quadrature norms and the numeric check of the squared action
//! coefficients of c.

use darboux_ladders::families::{Family, IndexList};
use darboux_ladders::ladder::{norm_ratio, RationalExtension};
use darboux_ladders::numerics::{quadrature_norm2, Grid};

fn main() {
    let ext = RationalExtension::new(&Family::Ho, &IndexList::new(vec![2])).unwrap();
    let grid = Grid::new(-12.0, 12.0, 2400).unwrap();
    for nu in [-3, 0, 3] {
        let f = ext.eigenstate(nu).unwrap().f;
        println!(
            "|psi_{nu}|^2 = {:.12}",
            quadrature_norm2(&f, &grid).unwrap()
        );
    }
    for nu in [0, 3, 4] {
        let (got, want) = norm_ratio(&ext, nu, &grid).unwrap();
        println!("nu = {nu}: kappa^2 norm ratio {got:.10}, Q(E) = {want}");
    }
}

//! The ladder operators c and b of a rational extension and their action
//! on the spectrum.

use darboux_ladders::families::{Family, IndexList};
use darboux_ladders::ladder::RationalExtension;
use darboux_ladders::quasirational::qr_ratio_constant;

fn main() {
    let ext = RationalExtension::new(&Family::Ho, &IndexList::new(vec![2])).unwrap();
    let c = ext.ladder_c();
    let b = ext.ladder_b();
    println!(
        "c: order {}, lambda {}, Q(E) = {}",
        c.order, c.lambda, c.q_poly
    );
    println!(
        "b: order {}, lambda {}, P(E) = {}",
        b.order, b.lambda, b.q_poly
    );

    let step = ext.indices.m_k() as i64 + 1;
    for nu in [-3, 0, 1, 2, 3, 4] {
        let psi = ext.eigenstate(nu).unwrap();
        let down = c.apply(&psi.f).unwrap();
        let verdict = if down.is_zero() {
            "zero mode".to_string()
        } else {
            let target = ext.eigenstate(nu - step).unwrap();
            match qr_ratio_constant(&down, &target.f) {
                Some(k) => format!("{k} psi_{}", nu - step),
                None => "not proportional".to_string(),
            }
        };
        let b_zero = b.apply(&psi.f).unwrap().is_zero();
        println!("c psi_{nu} = {verdict};  b psi_{nu} = 0: {b_zero}");
    }
}

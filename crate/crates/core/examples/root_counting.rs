//! Sturm sequences and exact real-root counts on intervals.

use darboux_ladders::exactmath::rat;
use darboux_ladders::exactmath::{count_real_roots, sturm_sequence, Interval};
use darboux_ladders::families::{hermite, laguerre, pseudo_hermite};

fn main() {
    let h = hermite(5);
    println!("H_5 = {h}");
    for p in sturm_sequence(&h) {
        println!("  {p}");
    }
    let line = Interval::real_line();
    println!(
        "real roots of H_5: {}",
        count_real_roots(&h, &line).unwrap()
    );

    for m in 0..6 {
        let p = pseudo_hermite(m);
        println!(
            "pseudo-Hermite m = {m}: {} real root(s)",
            count_real_roots(&p, &line).unwrap()
        );
    }

    let half = Interval::positive_half_line();
    let l = laguerre(3, &rat(-9, 2));
    println!(
        "L_3^(-9/2) has {} root(s) on z > 0",
        count_real_roots(&l, &half).unwrap()
    );
}

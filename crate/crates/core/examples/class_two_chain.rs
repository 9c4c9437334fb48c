//! The radial chain of class II seeds and the partner it produces.

use darboux_ladders::exactmath::int;
use darboux_ladders::extension::build_tilde_rho;
use darboux_ladders::families::radial_potential;

fn main() {
    let ell = int(3);
    let (k, m_k) = (2, 3);
    let t = build_tilde_rho(&ell, k, m_k).unwrap();
    for s in &t.seeds {
        println!("seed E = {}: {}", s.energy, s.f);
    }
    println!("partner = {}", t.potential);
    let target = &ell + int(k as i64) - int(m_k as i64 + 1);
    let shifted = &radial_potential(&target)
        + &darboux_ladders::RatFun::constant(int(m_k as i64 + 1), darboux_ladders::Var::X);
    println!(
        "equals V_{target} + {}: {}",
        m_k + 1,
        t.potential == shifted
    );
    println!(
        "rejects l = 0, k = 1, m_k = 2: {}",
        build_tilde_rho(&int(0), 1, 2).unwrap_err()
    );
}

//! State-adding and state-deleting partners and the constant shift
//! between them.

use darboux_ladders::exactmath::{int, ratfun_sub_constant_check};
use darboux_ladders::extension::{build_state_adding, build_state_deleting};
use darboux_ladders::families::{Family, IndexList};

fn main() {
    let configs = [
        (Family::Ho, vec![2]),
        (Family::Ho, vec![0, 1, 4]),
        (Family::rho(int(3)), vec![2]),
    ];
    for (family, m) in configs {
        let idx = IndexList::new(m.clone());
        let add = build_state_adding(&family, &idx).unwrap();
        let del = build_state_deleting(&family, &idx).unwrap();
        println!("{} {m:?}", family.name());
        println!("  W = {}", add.wronskian);
        println!("  V adding   = {}", add.potential);
        println!("  V deleting = {}", del.potential);
        let levels: Vec<String> = add
            .spectrum
            .levels(6)
            .iter()
            .map(|(nu, e)| format!("{nu}:{e}"))
            .collect();
        println!("  levels {}", levels.join(" "));
        println!(
            "  deleting - adding = {}",
            ratfun_sub_constant_check(&del.potential, &add.potential)
                .map_or("not constant".to_string(), |c| c.to_string())
        );
    }
}

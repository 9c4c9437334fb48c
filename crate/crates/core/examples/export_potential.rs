//! JSON and CSV export of an extended potential.

use darboux_ladders::cli::{extension_csv, extension_json};
use darboux_ladders::exactmath::rat;
use darboux_ladders::extension::build_state_deleting;
use darboux_ladders::families::{Family, IndexList};

fn main() {
    let p = build_state_deleting(&Family::rho(rat(5, 2)), &IndexList::new(vec![2])).unwrap();
    let doc = extension_json(&p, 4, Vec::new());
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    for line in extension_csv(&p).lines().take(4) {
        println!("{line}");
    }
}

//! Runs every exact verification suite on one configuration.

use darboux_ladders::cli::run_suites;
use darboux_ladders::cli::Suite;
use darboux_ladders::exactmath::int;
use darboux_ladders::families::{Family, IndexList};
use darboux_ladders::ladder::RationalExtension;

fn main() {
    let ext = RationalExtension::new(&Family::rho(int(3)), &IndexList::new(vec![0, 3])).unwrap();
    for report in run_suites(&ext, Suite::All, 6).unwrap() {
        let passed = report.checks.iter().filter(|c| c.passed).count();
        println!("{:<14} {passed}/{}", report.suite, report.checks.len());
        if let Some(f) = report.first_failure() {
            println!("  first failure: {} ({})", f.name, f.detail);
        }
    }
}

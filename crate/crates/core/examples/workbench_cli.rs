//! Drives the command-line front end in-process.

use darboux_ladders::cli::run;

fn main() {
    for args in [
        vec![
            "workbench",
            "spectrum",
            "--family",
            "ho",
            "--m",
            "0,1",
            "--numeric",
        ],
        vec![
            "workbench",
            "verify",
            "--family",
            "ho",
            "--m",
            "2",
            "--suite",
            "zero-modes",
            "--nu-max",
            "4",
        ],
        vec!["workbench", "extend", "--family", "ho", "--m", "1"],
    ] {
        let out = run(args.clone());
        println!("$ {}  (exit {})", args[1..].join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}

use darboux_ladders::cli::run;
use serde_json::Value;

fn workbench(args: &[&str]) -> darboux_ladders::cli::Outcome {
    run(std::iter::once("workbench").chain(args.iter().copied()))
}

#[test]
fn extend_emits_parseable_json() {
    let out = workbench(&["extend", "--family", "ho", "--m", "2", "--count", "4"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["family"], "ho");
    assert_eq!(v["mode"], "adding");
    let spectrum = v["spectrum"].as_array().unwrap();
    assert_eq!(spectrum.len(), 4);
    assert_eq!(spectrum[0]["nu"], -3);
    assert_eq!(spectrum[0]["E"]["num"], "-5");
    assert!(out.stderr.contains("ground level -5"));
}

#[test]
fn extend_is_deterministic() {
    let args = [
        "extend", "--family", "rho", "--ell", "5/2", "--m", "0,3", "--mode", "both",
    ];
    let a = workbench(&args);
    let b = workbench(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    let modes: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["mode"].as_str().unwrap())
        .collect();
    assert_eq!(modes, ["adding", "deleting"]);
}

#[test]
fn extend_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.csv");
    let out = workbench(&[
        "extend",
        "--family",
        "ho",
        "--m",
        "0,1",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(lines.next(), Some("x,V"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (x, v) = l.split_once(',').unwrap();
            (x.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 41);
    // the correction decays, so V approaches x^2 + offset far out
    let (x, v) = rows[0];
    assert!((v - x * x).abs() < 10.0);
}

#[test]
fn inadmissible_input_names_the_rule() {
    let out = workbench(&["extend", "--family", "ho", "--m", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("parity violation"), "{}", out.stderr);
    let out = workbench(&["verify", "--family", "rho", "--ell", "0", "--m", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("l + k + 1/2"), "{}", out.stderr);
}

#[test]
fn bad_arguments_exit_with_usage_error() {
    assert_eq!(
        workbench(&["extend", "--family", "qho", "--m", "2"]).code,
        2
    );
    assert_eq!(
        workbench(&["spectrum", "--family", "ho", "--m", "x"]).code,
        2
    );
    let help = workbench(&["--help"]);
    assert_eq!(help.code, 0);
    for cmd in ["extend", "verify", "spectrum"] {
        assert!(help.stdout.contains(cmd));
    }
}

#[test]
fn verify_reports_every_suite() {
    let out = workbench(&["verify", "--family", "ho", "--m", "2", "--nu-max", "4"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let suites: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    for want in [
        "shift",
        "tilde",
        "pha-c",
        "pha-b",
        "zero-modes",
        "coefficients",
        "norm-ratio",
        "b-singlets",
    ] {
        assert!(suites.contains(&want), "{want} missing from {suites:?}");
    }
}

#[test]
fn spectrum_table_matches_exact_levels() {
    let out = workbench(&[
        "spectrum",
        "--family",
        "ho",
        "--m",
        "2",
        "--mode",
        "deleting",
        "--numeric",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let rows: Vec<&str> = out.stdout.lines().skip(1).take(5).collect();
    // same labels as the adding branch, shifted up by 2 m_k + 2
    assert!(rows[0].starts_with("-3\t1\t"), "{}", rows[0]);
    assert!(rows[1].starts_with("0\t7\t"), "{}", rows[1]);
    let last = out.stdout.lines().last().unwrap();
    let r: f64 = last
        .strip_prefix("max residual ")
        .unwrap()
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(r < 1e-3);
}

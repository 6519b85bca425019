use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bratteli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn validate_and_proper() {
    assert_eq!(ok(&["--input", &data("odometer.json"), "validate"]), "valid");
    assert_eq!(ok(&["--input", &data("odometer.json"), "proper"]), "YES");
    assert!(ok(&["--input", &data("two_max_paths.json"), "proper"]).starts_with("NO"));
    assert!(ok(&["--input", &data("fibonacci.json"), "proper"]).starts_with("NO"));
}

#[test]
fn fibonacci_orbit() {
    assert_eq!(
        ok(&["--input", &data("fibonacci.json"), "orbit", "--length", "8"]),
        "abaababa"
    );
}

#[test]
fn literal_input() {
    let lit = r#"{"kind":"stationary","alphabet":["a"],"top":"aa","incoming":{"a":"aa"}}"#;
    assert_eq!(ok(&["--literal", lit, "matrix", "--level", "2"]), "[[2]]");
}

#[test]
fn group_queries() {
    let odo = data("odometer.json");
    assert_eq!(ok(&["--input", &odo, "positive", "2:[3]"]), "POS");
    assert_eq!(ok(&["--input", &odo, "positive", "2:[-3]"]), "NEG");
    assert_eq!(ok(&["--input", &odo, "equal", "1:[1]", "2:[2]"]), "EQUAL");
    assert_eq!(ok(&["--input", &odo, "equal", "1:[1]", "2:[1]"]), "DISTINCT");
}

#[test]
fn towers_json() {
    let out = ok(&["--input", &data("odometer.json"), "towers", "--depth", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["levels"][2]["heights"], serde_json::json!([4]));
}

#[test]
fn substitution_round_trip() {
    let out = ok(&[
        "--input",
        &data("fibonacci_substitution.json"),
        "substitution",
        "--to-diagram",
    ]);
    let back = ok(&["--literal", &out, "orbit", "--length", "5"]);
    assert_eq!(back, "abaab");
}

#[test]
fn checks_pass() {
    let fib = data("fibonacci.json");
    assert!(ok(&["--input", &fib, "gamma-check", "--depth", "3"])
        .lines()
        .all(|l| !l.contains("FAIL")));
    assert_eq!(
        ok(&["--input", &fib, "first-return", "--keep", "0", "--length", "100"]),
        "PASS"
    );
    assert!(ok(&["--input", &data("sturmian.json"), "split-top"]).contains("a#1"));
}

#[test]
fn finite_change_and_dot() {
    let out = ok(&[
        "--input",
        &data("odometer_single_top.json"),
        "change",
        "--spec",
        &data("double_top.json"),
        "--depth",
        "2",
    ]);
    assert!(out.contains("becomes 1:[2]"));
    assert!(ok(&["--input", &data("fibonacci.json"), "dot", "--depth", "2"]).starts_with("digraph"));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("bratteli-cli-{}.txt", std::process::id()));
    let p = path.to_string_lossy().into_owned();
    assert_eq!(
        ok(&[
            "--input",
            &data("fibonacci.json"),
            "--output",
            &p,
            "orbit",
            "--length",
            "3"
        ]),
        ""
    );
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim_end(), "aba");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["orbit", "--length", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["--input", &data("odometer.json"), "frobnicate"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["--input", &data("fibonacci_explicit.json"), "matrix"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["--input", "/nonexistent/diagram.json", "validate"]).status.code(),
        Some(1)
    );
    let bad = run(&["--literal", "{bad", "validate"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 1"));
    assert_eq!(
        run(&["--input", &data("fibonacci.json"), "split-top"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

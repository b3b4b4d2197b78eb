use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_semideal");

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--order", "9"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--theorems", "T-NOPE", &fixture("example2.sg")])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["analyze", &fixture("missing.sg")]).status.code(),
        Some(1)
    );
}

#[test]
fn validate_reports_zero() {
    let o = run(&["validate", &fixture("example2.sg")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "order: 3\nzero: a\nassociative: yes\n");
    let v = json(&run(&["validate", &fixture("example1.sg"), "--json"]));
    assert_eq!(v["associative"], false);
    assert_eq!(v["violation"]["triple"], serde_json::json!(["a", "a", "b"]));
}

#[test]
fn analyze_json_has_every_section() {
    let o = run(&["analyze", &fixture("example2.sg"), "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    for key in [
        "order",
        "elements",
        "zero",
        "classifications",
        "interiorIdeals",
        "green",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["classifications"]["regular"], true);
    assert_eq!(v["green"]["L"], serde_json::json!([["a"], ["b"], ["c"]]));
}

#[test]
fn ideals_of_other_kinds() {
    let v = json(&run(&[
        "ideals",
        &fixture("left_zero2.sg"),
        "--kind",
        "left",
        "--json",
    ]));
    assert_eq!(v["kind"], "left");
    assert_eq!(v["ideals"], serde_json::json!([["x", "y"]]));
    assert!(v.get("interiorIdeals").is_none());
}

#[test]
fn green_text() {
    let o = run(&["green", &fixture("left_zero2.sg")]);
    assert!(o.status.success());
    assert!(
        stdout(&o).lines().any(|l| l == "R: {x} {y}"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn enumerate_outputs_agree() {
    let cat = stdout(&run(&["enumerate", "--order", "3", "--up-to-iso"]));
    assert_eq!(cat.matches("elements:").count(), 24);
    let lines = stdout(&run(&["enumerate", "--order", "3", "--json"]));
    assert_eq!(lines.lines().count(), 113);
    let limited = stdout(&run(&[
        "enumerate",
        "--order",
        "4",
        "--json",
        "--limit",
        "5",
    ]));
    assert_eq!(limited.lines().count(), 5);
}

#[test]
fn verify_single_file_and_catalog() {
    let o = run(&["verify", &fixture("null2.sg"), "--theorems", "T-SIMPLE-IFF"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("erratum zero-degenerate"));
    let dir = std::env::temp_dir().join(format!("semideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cat = dir.join("order2.sg");
    std::fs::write(&cat, run(&["enumerate", "--order", "2"]).stdout).unwrap();
    let v = json(&run(&[
        "verify",
        "--catalog",
        cat.to_str().unwrap(),
        "--json",
    ]));
    assert_eq!(v["corpus"]["count"], 8);
    assert_eq!(v["schema"], 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn counterexample_exit_codes() {
    let o = run(&[
        "counterexample",
        "--theorem",
        "T-SIMPLE-IFF",
        "--max-order",
        "2",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["status"], "fails");
    assert_eq!(v["detail"]["replayed"], true);
    let o = run(&[
        "counterexample",
        "--theorem",
        "T-INTERSECTION",
        "--max-order",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no counterexample up to order 3"));
}

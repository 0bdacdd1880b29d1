//! The command-line binary: exit codes, error shape, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_periplectic")).args(args).output().expect("spawn")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--suite", "all", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
}

#[test]
fn same_seed_same_bytes() {
    let a = run(&["--seed", "5", "decomp", "--n", "4"]);
    let b = run(&["--seed", "5", "--threads", "2", "decomp", "--n", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--seed", "6", "decomp", "--n", "4"]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn errors_are_structured() {
    for args in [
        &["--char", "4", "decomp", "--n", "3"][..],
        &["--char", "3", "cell", "--n", "3", "--lambda", "[1]"],
        &["cell", "--n", "3", "--lambda", "[2]"],
        &["decomp"],
        &["multiply", "--n", "2", "--lhs", "[{", "--rhs", "[]"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: serde_json::Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
        assert!(err["error"].is_string() && err["message"].is_string());
    }
}

#[test]
fn multiply_in_a2() {
    let eps = r#"[{"coeff":"1","diagram":{"source":2,"target":2,"pairs":[["B1","B2"],["T1","T2"]]}}]"#;
    let swap = r#"[{"coeff":"1/2","diagram":{"source":2,"target":2,"pairs":[["B1","T2"],["B2","T1"]]}}]"#;
    let out = run(&["multiply", "--n", "2", "--lhs", eps, "--rhs", eps]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!([]));
    let out = run(&["multiply", "--n", "2", "--lhs", swap, "--rhs", swap]);
    assert_eq!(json(&out)[0]["coeff"], "1/4");
}

#[test]
fn bratteli_rows() {
    let out = run(&["bratteli", "--rows", "2"]);
    assert_eq!(json(&out)["rows"], serde_json::json!([[[1]], [[], [2], [1, 1]]]));
    assert_eq!(json(&out)["edges"], serde_json::json!([[1, 0, 0], [1, 0, 1], [1, 0, 2]]));
    let dot = run(&["bratteli", "--rows", "2", "--dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph"));
}

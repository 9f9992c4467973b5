use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use quadpair::cli::{Instance, EXIT_BUDGET, EXIT_INSOLVABLE, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAIL};
use quadpair::exact::{int_vec, Matrix};

fn quadpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadpair")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn generated(dir: &Path, seed: u64) -> PathBuf {
    let path = dir.join(format!("g{seed}.txt"));
    let o = quadpair(&["generate", "--n", "13", "--seed", &seed.to_string(), "--require-solvable", "-o", s(&path)]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    path
}

#[test]
fn full_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let inst = generated(dir.path(), 5);
    let check = quadpair(&["check", s(&inst)]);
    assert_eq!(check.status.code(), Some(EXIT_OK));
    assert!(stdout(&check).starts_with("H: OK, n = 13"));
    let analyze = quadpair(&["analyze", s(&inst)]);
    assert!(stdout(&analyze).starts_with("REAL-SOLVABLE"));

    let cert = dir.path().join("c.json");
    let solve = quadpair(&["solve", s(&inst), "--seed", "5", "--json", "-o", s(&cert)]);
    assert_eq!(solve.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&solve.stderr));
    let verify = quadpair(&["verify", s(&inst), s(&cert)]);
    assert_eq!(verify.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&verify).trim(), "PASS residue0 = 0, residue1 = 0");

    // perturb one coordinate
    let text = std::fs::read_to_string(&cert).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let x0 = v["x"][0].as_str().unwrap().to_string();
    v["x"][0] = serde_json::Value::String(if x0 == "7" { "8" } else { "7" }.into());
    std::fs::write(&cert, v.to_string()).unwrap();
    let bad = quadpair(&["verify", s(&inst), s(&cert)]);
    assert_eq!(bad.status.code(), Some(EXIT_VERIFY_FAIL));
    assert!(stdout(&bad).starts_with("FAIL"));
}

#[test]
fn definite_pencil_exits_insolvable() {
    let dir = tempfile::tempdir().unwrap();
    let q0 = Matrix::diagonal(&int_vec(&[1; 13]));
    let q1 = Matrix::diagonal(&int_vec(&(1..=13).collect::<Vec<_>>()));
    let path = dir.path().join("definite.txt");
    std::fs::write(&path, Instance::new(q0, q1).to_text()).unwrap();
    let o = quadpair(&["solve", s(&path)]);
    assert_eq!(o.status.code(), Some(EXIT_INSOLVABLE));
    assert!(stdout(&o).contains("witness λ = "));
    let a = quadpair(&["analyze", s(&path)]);
    assert_eq!(a.status.code(), Some(EXIT_INSOLVABLE));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(quadpair(&[]).status.code(), Some(EXIT_USAGE));
    assert_eq!(quadpair(&["solve"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(quadpair(&["frobnicate"]).status.code(), Some(EXIT_USAGE));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "2\n1 0\n0 x\n1 0\n0 1\n").unwrap();
    let o = quadpair(&["check", s(&path)]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let missing = quadpair(&["verify", s(&path), "/nonexistent/cert"]);
    assert_eq!(missing.status.code(), Some(EXIT_USAGE));
}

#[test]
fn external_timeout_is_a_budget_failure() {
    let dir = tempfile::tempdir().unwrap();
    let inst = generated(dir.path(), 7);
    let o = Command::new(env!("CARGO_BIN_EXE_quadpair"))
        .args(["solve", s(&inst), "--oracle-cmd", "sleep 30"])
        .env("ORACLE_TIMEOUT_SECS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_BUDGET), "{}", String::from_utf8_lossy(&o.stderr));
}

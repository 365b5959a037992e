//! End-to-end tests of the `kneadgen` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kneadgen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kneadgen"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn spec_arg(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

#[test]
fn spanning_set_of_example1() {
    let o = run(&["spanning", "--spec", &spec_arg("example1.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "G(e_1) = ((5z^2-6z+1)/(4z^2-7z+1), (-3z^2+3z)/(4z^2-7z+1))\n\
         G(e_2) = ((-2z^2+2z)/(4z^2-7z+1), (2z^2-3z+1)/(4z^2-7z+1))\n\
         G(e_3) = ((z^2+z)/(4z^2-7z+1), (-3z^2+3z)/(4z^2-7z+1))\n\
         G(e_4) = ((-2z^2+2z)/(4z^2-7z+1), (-2z^2+4z)/(4z^2-7z+1))\n"
    );
}

#[test]
fn determinants_of_example1() {
    let o = run(&["delta", "--spec", &spec_arg("example1.json")]);
    assert_eq!(stdout(&o), "Δ = (4z^2-7z+1)/(z^2-2z+1)\n");
    let o = run(&["delta", "--alpha", "1", "--beta", "2", "--spec", &spec_arg("example1.json")]);
    assert_eq!(stdout(&o), "Δ_1(2) = (2z^3+2z^2-7z+1)/(z^2-2z+1)\n");
}

#[test]
fn basis_of_example2() {
    let o = run(&["basis", "--json", "--spec", &spec_arg("example2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["selected_betas"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["basis"][2]["components"][0]["display"], "(-(1/3)z)/(z-(1/3))");
}

#[test]
fn dim_and_verify_on_three_periodic_spec() {
    let spec = spec_arg("three_periodic.json");
    let o = run(&["dim", "--spec", &spec]);
    assert_eq!(o.status.code(), Some(0));
    let d: usize = stdout(&o).trim().parse().unwrap();
    assert!((2..=8).contains(&d));
    let o = run(&["verify", "--terms", "50", "--spec", &spec]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS β=1..8\n");
}

#[test]
fn taylor_matches_hand_iteration() {
    let o = run(&["taylor", "--beta", "3", "--terms", "3", "--spec", &spec_arg("example1.json")]);
    assert_eq!(stdout(&o), "v_0 = (0, 0)\nv_1 = (1, 3)\nv_2 = (8, 18)\nv_3 = (52, 114)\n");
}

#[test]
fn spec_is_read_from_stdin() {
    let text = std::fs::read_to_string(data("example1.json")).unwrap();
    let o = run_stdin(&["dim"], &text);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
    let o = run_stdin(&["dim", "--spec", "-"], &text);
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn json_verify_report() {
    let o = run(&["verify", "--json", "--beta", "2", "--spec", &spec_arg("example1.json")]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["terms"], 40);
    assert_eq!(v["results"][0]["beta"], 2);
    assert_eq!(v["results"][0]["mismatch"], Value::Null);
}

#[test]
fn injected_fault_fails_verification() {
    let o = run(&["verify", "--beta", "1", "--inject-fault", "0:1:1", "--spec", &spec_arg("example1.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "FAIL β=1: first mismatch at z^1: orbit (1, 3), closed form (2, 3)\n");
}

#[test]
fn malformed_input_exits_2() {
    let o = run_stdin(&["dim"], "{\"p\": 1}");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing field `s`"), "{}", stderr(&o));

    let o = run_stdin(&["dim"], r#"{"p": 1, "s": 1, "matrices": [[["1/0"]]]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("matrix A_0, entry (1,1)"), "{}", stderr(&o));

    let o = run_stdin(&["dim"], r#"{"p": 2, "s": 2, "matrices": [[["1","2"],["3","4"]]]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected 2 matrices, found 1"), "{}", stderr(&o));

    let o = run(&["dim", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let spec = spec_arg("example1.json");
    assert_eq!(run(&["genfun", "--beta", "0", "--spec", &spec]).status.code(), Some(2));
    assert_eq!(run(&["delta", "--alpha", "1", "--spec", &spec]).status.code(), Some(2));
    assert_eq!(run(&["delta", "--alpha", "3", "--beta", "1", "--spec", &spec]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

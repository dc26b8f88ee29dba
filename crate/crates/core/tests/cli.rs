use std::process::{Command, Output};

use rs_cwe::cli::{run_cli, BUDGET_ENV, EXIT_OK, EXIT_SIZE_LIMIT, EXIT_USAGE};
use rs_cwe::CweRecord;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(std::iter::once("rs-cwe").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str], env: Option<(&str, &str)>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rs-cwe"));
    cmd.args(args).env_remove(BUDGET_ENV);
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

#[test]
fn compare_gf4_full_field() {
    let (code, out, _) = run(&["compare", "--p", "2", "--m", "2", "--k", "3", "--eval", "full"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("equal"), "{out}");
}

#[test]
fn compute_json_fixture() {
    let (code, out, _) = run(&["compute", "--p", "2", "--m", "1", "--k", "2", "--eval", "custom:0,1", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.trim_end(),
        r#"{"p":2,"m":1,"k":2,"n":2,"extended":false,"alpha":[0,1],"terms":[{"e":[0,2],"c":1},{"e":[1,1],"c":2},{"e":[2,0],"c":1}]}"#
    );
    assert_eq!(CweRecord::from_json(out.trim_end()).unwrap().cwe.num_terms(), 3);
}

#[test]
fn methods_agree_on_output() {
    let base = ["compute", "--p", "3", "--m", "2", "--k", "3", "--eval", "punctured:4", "--extended", "--output", "json"];
    let brute = run(&[&base[..], &["--method", "brute"]].concat());
    let formula = run(&[&base[..], &["--method", "formula"]].concat());
    assert_eq!(brute.0, EXIT_OK);
    assert_eq!(brute.1, formula.1);
}

#[test]
fn non_prime_characteristic() {
    let (code, _, err) = run(&["compute", "--p", "4", "--m", "1", "--k", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("p must be prime"), "{err}");
}

#[test]
fn invalid_parameters_are_usage_errors() {
    for args in [
        &["compute", "--p", "3", "--m", "1", "--k", "2", "--eval", "custom:0,0"][..],
        &["compute", "--p", "3", "--m", "1", "--k", "4"],
        &["compute", "--p", "3", "--m", "1", "--k", "2", "--eval", "punctured:9"],
        &["compute", "--p", "3", "--m", "1", "--k", "2", "--eval", "nonsense"],
        &["compute", "--p", "2", "--m", "1", "--k", "2", "--bogus"],
        &["compare", "--p", "5", "--m", "1", "--k", "4"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn budget_flag_and_environment() {
    let (code, _, err) = run(&["compute", "--p", "3", "--m", "2", "--k", "3", "--budget", "100"]);
    assert_eq!(code, EXIT_SIZE_LIMIT, "{err}");
    assert!(err.contains("729"), "{err}");

    let args = ["compute", "--p", "3", "--m", "2", "--k", "3", "--method", "brute"];
    let limited = binary(&args, Some((BUDGET_ENV, "100")));
    assert_eq!(limited.status.code(), Some(EXIT_SIZE_LIMIT));
    let unlimited = binary(&args, None);
    assert_eq!(unlimited.status.code(), Some(EXIT_OK));
    let bad = binary(&args, Some((BUDGET_ENV, "lots")));
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn explain_lists_corrections() {
    let (code, out, _) = run(&["explain"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sum_rho w_0 w_rho^q (coefficient 1)"), "{out}");
    assert!(out.contains("sum_rho w_rho^(q-1)"), "{out}");
    assert_eq!(out.matches("closed form vs enumeration equal").count(), rs_cwe::errata::ERRATA.len());
}

#[test]
fn weights_text_and_json() {
    let (code, out, _) = run(&["weights", "--p", "2", "--m", "2", "--k", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["A[0] = 1", "A[1] = 0", "A[2] = 0", "A[3] = 12", "A[4] = 3"]);
    let (_, json, _) = run(&["weights", "--p", "2", "--m", "2", "--k", "2", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["weights"], serde_json::json!([1, 0, 0, 12, 3]));
}

#[test]
fn sweep_is_reproducible() {
    let args = ["sweep", "--p", "5", "--m", "1", "--sets", "5", "--seed", "7"];
    let (code, first, _) = run(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first.matches(": equal").count(), 10);
    assert_eq!(run(&args).1, first);
}

#[test]
fn help_goes_to_stdout() {
    let out = binary(&["--help"], None);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&out.stdout).contains("compute"));
    assert_eq!(binary(&[], None).status.code(), Some(EXIT_USAGE));
}

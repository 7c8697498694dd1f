//! Behavioral tests for the `loopbraid` binary: golden outputs, exit codes,
//! and stable machine-format JSON.

use std::process::{Command, Output};

fn loopbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = loopbraid(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn burau_golden() {
    assert_eq!(
        stdout(&["burau", "-n", "2", "s1"]),
        "n: 2\nword: s1\nburau:\n[1 - t, t]\n[1, 0]\n"
    );
    assert_eq!(
        stdout(&["burau", "-n", "2", "r1"]),
        "n: 2\nword: r1\nburau:\n[0, 1]\n[1, 0]\n"
    );
}

#[test]
fn perm_golden() {
    let text = stdout(&["perm", "-n", "4", "s1 s3"]);
    assert!(text.contains("mu: (1 2)(3 4)"));
    assert!(text.contains("cycles: t1 = {1,2}; t2 = {3,4}"));
    assert!(text.contains("periods: circle 1: 2; circle 2: 2; circle 3: 2; circle 4: 2"));
}

#[test]
fn lefschetz_reference_word_golden() {
    let expected = "\
n: 4
word: s1 s3
mu: (1 2)(3 4)
cycles: t1 = {1,2}; t2 = {3,4}
polynomial: 1
nielsen lower bound: 1
classes (class, linking, index, sub-links):
  1  (0, 0)  +1  lk(A1={1,2}) = 0  lk(A2={3,4}) = 0
paper conformance: differs: computed 1; paper 1 + t1 - t2
";
    assert_eq!(stdout(&["lefschetz", "-n", "4", "s1 s3"]), expected);
}

#[test]
fn mixed_suffixes_are_rejected() {
    let out = loopbraid(&["perm", "-n", "2", "s1'^2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lefschetz_machine_schema() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "lefschetz",
        "-n",
        "4",
        "s1 s3",
        "--format",
        "machine",
    ]))
    .expect("valid json");
    assert_eq!(json["n"], 4);
    assert_eq!(json["word"], "s1 s3");
    assert_eq!(json["mu_cycles"], serde_json::json!([[1, 2], [3, 4]]));
    assert_eq!(
        json["polynomial"],
        serde_json::json!([{"coeff": 1, "exp": [0, 0]}])
    );
    assert_eq!(
        json["classes"],
        serde_json::json!([{"linking": [0, 0], "index": 1}])
    );
    assert_eq!(json["nielsen_lower_bound"], 1);
    assert!(json["paper_conformance"]
        .as_str()
        .unwrap()
        .starts_with("differs"));
    assert!(json.get("periodic").is_none());
}

#[test]
fn periodic_machine_includes_bound_section() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "periodic", "-n", "4", "s1 s3", "--p", "1", "--format", "machine",
    ]))
    .expect("valid json");
    assert_eq!(json["periodic"]["p"], 1);
    assert_eq!(json["periodic"]["M"], 1);
    assert_eq!(json["periodic"]["n_p"], 0);
    assert_eq!(json["periodic"]["raw_bound"], 1);
    assert_eq!(json["periodic"]["clamped_bound"], 1);
}

#[test]
fn matrix_machine_contains_all_six_matrices() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["matrix", "-n", "2", "s1", "--format", "machine"]))
            .expect("valid json");
    let m = &json["matrices"];
    assert_eq!(m["R"][0][0], "1 - a2");
    assert_eq!(m["Rbar"][1][1], "1 - a1");
    assert_eq!(m["S"][0][0], "-1 + a2");
    assert_eq!(m["R_pi_mu"][0][0], "1 - t1");
    assert_eq!(m["Rbar_pi_mu"][0][1], "t1");
    assert_eq!(m["S_pi_mu"][1][1], "1 - t1");
}

#[test]
fn index_out_of_range_exits_3_and_names_token() {
    let out = loopbraid(&["lefschetz", "-n", "3", "s9"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("s9"), "stderr: {err}");
    assert!(err.contains("position"), "stderr: {err}");
}

#[test]
fn syntax_error_exits_2_and_names_token() {
    let out = loopbraid(&["lefschetz", "-n", "3", "s1 q2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("`q`"), "stderr: {err}");
    assert!(err.contains("position 4"), "stderr: {err}");
}

#[test]
fn usage_errors_exit_2() {
    let out = loopbraid(&["lefschetz", "s1"]); // missing -n
    assert_eq!(out.status.code(), Some(2));
    let out = loopbraid(&["periodic", "-n", "2", "s1"]); // missing --p
    assert_eq!(out.status.code(), Some(2));
    let out = loopbraid(&["lefschetz", "-n", "0", "s1"]); // n out of range
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_word_is_accepted() {
    let text = stdout(&["lefschetz", "-n", "3", ""]);
    assert!(text.contains("word: (empty)"));
    assert!(text.contains("polynomial: 1"));
}

#[test]
fn unicode_aliases_parse() {
    let text = stdout(&["perm", "-n", "3", "σ1 ρ2"]);
    assert!(text.contains("word: s1 r2"));
}

#[test]
fn survey_table_shape() {
    let text = stdout(&["survey", "-n", "3", "--max-len", "1"]);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(
        lines[0],
        "word\tm\tpolynomial\tclasses\tcancels\tconformance"
    );
    // Identity plus the six length-1 words.
    assert_eq!(lines.len(), 8);
    assert!(lines[1].starts_with("-\t3\t1\t1\tyes"));
    // A word that does not cancel appears at length 2.
    let text = stdout(&["survey", "-n", "3", "--max-len", "2"]);
    assert!(text.lines().any(|l| l.starts_with("s1 r2\t1\tt1\t1\tno")));
}

#[test]
fn verify_seeded_run_passes_and_reproduces() {
    let a = stdout(&["verify", "-n", "3", "--max-len", "3", "--seed", "11"]);
    let b = stdout(&["verify", "-n", "3", "--max-len", "3", "--seed", "11"]);
    assert_eq!(a, b);
    assert!(a.contains("all gating checks passed"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "verify",
        "-n",
        "3",
        "--max-len",
        "3",
        "--seed",
        "11",
        "--format",
        "machine",
    ]))
    .expect("valid json");
    assert_eq!(json["all_pass"], true);
    assert_eq!(json["seed"], 11);
}

use std::path::PathBuf;
use std::process::{Command, Output};

use hochschild_cli::algebra_file::AlgebraFile;
use hochschild_cli::{RunReport, Status};
use hochschild_core::hhalgebra::builtin;
use serde_json::{json, Value};

fn hochschild(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hochschild"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn json_report(args: &[&str]) -> (RunReport, i32) {
    let mut full = vec!["--json", "--no-timing"];
    full.extend_from_slice(args);
    let out = hochschild(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let report = RunReport::from_json(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (report, out.status.code().unwrap())
}

#[test]
fn euler_rank_two() {
    let (r, code) = json_report(&["euler", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(
        serde_json::to_value(&r.polynomial).unwrap(),
        json!([0, 1, 0, 1])
    );
    assert_eq!(r.euler.unwrap().to_string(), "2");
    let (r, _) = json_report(&["euler", "--n", "3"]);
    assert_eq!(r.euler.unwrap().to_string(), "6");
}

#[test]
fn invalid_ranks_exit_two() {
    for args in [
        &["euler", "--n", "0"][..],
        &["euler", "--n", "8"],
        &["lemma42", "--n", "9"],
        &["hecke-square", "--n", "0"],
        &["interp", "--n", "3", "--primes", "2,3,5,7"],
        &["interp", "--n", "2", "--primes", "2,3"],
        &["bruteforce", "--n", "2", "--p", "4"],
        &["hh", "--algebra", "builtin:nope"],
        &["euler"],
    ] {
        let code = hochschild(args).status.code();
        assert_eq!(code, Some(2), "{args:?}");
    }
}

#[test]
fn budget_errors_report_the_budget() {
    let out = hochschild(&["bruteforce", "--n", "4", "--p", "5", "--level", "full"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("needs") && stderr.contains("cap is 200000"),
        "{stderr}"
    );
}

#[test]
fn lemma_table() {
    let (r, code) = json_report(&["lemma42", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r.strata.len(), 120);
    assert_eq!(r.strata["12345"], json!(1));
    assert!(r
        .strata
        .iter()
        .filter(|(k, _)| *k != "12345")
        .all(|(_, v)| *v == json!(0)));
    let (r, code) = json_report(&["lemma42", "--n", "1"]);
    assert_eq!((code, r.strata.len()), (0, 1));
}

#[test]
fn bruteforce_counts() {
    let (r, code) = json_report(&["bruteforce", "--n", "2", "--p", "2", "--level", "full"]);
    assert_eq!(code, 0);
    assert_eq!(r.strata["12"], json!(4));
    assert_eq!(r.strata["21"], json!(6));
    assert_eq!(r.details["total"], json!(10));
    let (r, code) = json_report(&["bruteforce", "--n", "3", "--p", "3", "--compare"]);
    assert_eq!(code, 0);
    assert_eq!(r.checks.len(), 7);
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let run = |threads: &str| {
        hochschild(&[
            "--json",
            "--no-timing",
            "--threads",
            threads,
            "bruteforce",
            "--n",
            "3",
            "--p",
            "5",
        ])
        .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn hecke_square_coefficients() {
    let (r, _) = json_report(&["hecke-square", "--n", "2"]);
    assert_eq!(r.strata["12"], json!([0, 1]));
    assert_eq!(r.strata["21"], json!([-1, 1]));
    let (r, code) = json_report(&["hecke-square", "--n", "3", "--at", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r.strata["123"], json!(1));
    let (r, code) = json_report(&["hecke-square", "--n", "3", "--at", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r.checks.len(), 6);
}

#[test]
fn hh_builtins_and_files() {
    let (r, code) = json_report(&["hh", "--algebra", "builtin:sl2-catO", "--max-degree", "6"]);
    assert_eq!(code, 0);
    assert_eq!(r.details["dims"], json!([2, 1, 1, 0, 0, 0, 0]));
    let (r, _) = json_report(&[
        "hh",
        "--algebra",
        "builtin:semisimple-2",
        "--max-degree",
        "3",
    ]);
    assert_eq!(r.details["dims"], json!([2, 0, 0, 0]));
    let (r, code) = json_report(&[
        "hh",
        "--algebra",
        &fixture("sl2-catO.json"),
        "--max-degree",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.details["dims"], json!([2, 1, 1, 0, 0]));
}

#[test]
fn hh_on_a_reordered_presentation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reordered.json");
    let permuted = builtin("sl2-catO")
        .unwrap()
        .permute_basis(&[4, 1, 3, 0, 2])
        .unwrap();
    std::fs::write(&path, AlgebraFile::from_presentation(&permuted).to_json()).unwrap();
    let (r, code) = json_report(&[
        "hh",
        "--algebra",
        path.to_str().unwrap(),
        "--max-degree",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.details["dims"], json!([2, 1, 1, 0, 0, 0]));
}

#[test]
fn invalid_presentation_lists_violations() {
    let out = hochschild(&["--json", "hh", "--algebra", &fixture("bad.json")]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], json!("error"));
    let violations = v["violations"].as_array().unwrap();
    assert!(
        violations
            .iter()
            .any(|s| s.as_str().unwrap().contains("not orthogonal")),
        "{v}"
    );

    let out = hochschild(&["hh", "--algebra", &fixture("bad.json")]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("b0, b0 are not orthogonal"));
}

#[test]
fn interpolation() {
    let (r, code) = json_report(&["interp", "--n", "2", "--primes", "2,3,5,7,11"]);
    assert_eq!(code, 0);
    assert_eq!(
        serde_json::to_value(&r.polynomial).unwrap(),
        json!([0, 1, 0, 1])
    );
}

#[test]
fn json_is_deterministic_and_round_trips() {
    for args in [
        &["--json", "--no-timing", "euler", "--n", "4"][..],
        &[
            "--json",
            "--no-timing",
            "hh",
            "--algebra",
            "builtin:sl2-catO",
        ],
        &[
            "--json",
            "--no-timing",
            "interp",
            "--n",
            "2",
            "--primes",
            "2,3,5,7",
        ],
    ] {
        let first = hochschild(args).stdout;
        assert_eq!(first, hochschild(args).stdout, "{args:?}");
        let text = String::from_utf8(first).unwrap();
        let report = RunReport::from_json(&text).unwrap();
        assert_eq!(format!("{}\n", report.to_json()), text);
    }
}

#[test]
fn timing_is_reported_by_default() {
    let out = hochschild(&["--json", "euler", "--n", "2"]);
    let r = RunReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert!(r.ms.is_some());
}

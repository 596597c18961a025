use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use picard_core::cli::{generators_from_json, generators_to_json};
use picard_core::generators;
use serde_json::Value;

fn picard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/generators.json")
}

#[test]
fn fixture_matches_builtin_generators() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, generators_to_json());
    let parsed = generators_from_json(&v, "fixture").unwrap();
    for ((name, g), (expected_name, expected)) in parsed.iter().zip(generators::all()) {
        assert_eq!(name, expected_name);
        assert_eq!(g, &expected);
    }
}

#[test]
fn verify_theorem_passes_and_is_deterministic() {
    let f = fixture();
    let args = [
        "verify-theorem",
        "--generators",
        f.to_str().unwrap(),
        "--samples",
        "100",
    ];
    let a = picard(&args);
    let b = picard(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stderr)
    );
    assert_eq!(a.stdout, b.stdout);
    let report = stdout_json(&a);
    assert_eq!(report["pass"], true);
    let checks: Vec<&str> = report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["check"].as_str().unwrap())
        .collect();
    assert_eq!(checks.len(), 5);
    assert!(checks[0].starts_with("(a)") && checks[4].starts_with("(e)"));
}

#[test]
fn depth_zero_fails_only_the_covering_stage() {
    let out = picard(&["verify-theorem", "--depth", "0", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["first_failure"], "(e) covering");
    let passes: Vec<bool> = report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["pass"].as_bool().unwrap())
        .collect();
    assert_eq!(passes, [true, true, true, true, false]);
    assert!(report["verdicts"][4]["detail"]["depth_exhausted"]["box"].is_object());
}

#[test]
fn corrupted_generator_file_fails_stage_a() {
    let mut v = generators_to_json();
    v["M2"]["rows"][1][1] = serde_json::json!([1, 1]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gens.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let out = picard(&[
        "verify-theorem",
        "--generators",
        path.to_str().unwrap(),
        "--samples",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["first_failure"], "(a) generators");
    let problem = &report["verdicts"][0]["detail"]["problems"][0];
    assert_eq!(problem["generator"], "M2");
    assert!(problem["matrix"]["rows"].is_array());
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"rows\": [[1, 2]]}").unwrap();
    let out = picard(&["decompose", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rows"));
    let out = picard(&[
        "decompose",
        dir.path().join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(picard(&["cover", "--piece", "0"]).status.code(), Some(2));
    let r = dir.path().join("r.json");
    std::fs::write(
        &r,
        picard_core::json::matrix_to_json(&generators::inversion()).to_string(),
    )
    .unwrap();
    assert_eq!(
        picard(&["word", r.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn decompose_and_word() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = dir.path().join("t2.json");
    std::fs::write(
        &t2,
        picard_core::json::matrix_to_json(&generators::t2()).to_string(),
    )
    .unwrap();
    let out = picard(&["decompose", t2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["result"]["t"], "2/1");
    assert_eq!(r["result"]["r"], "1/1");

    let id = dir.path().join("id.json");
    std::fs::write(
        &id,
        picard_core::json::matrix_to_json(&picard_core::form::GroupElement::identity()).to_string(),
    )
    .unwrap();
    let r = stdout_json(&picard(&["word", id.to_str().unwrap()]));
    assert_eq!(r["result"]["word"]["letters"].as_array().unwrap().len(), 0);

    let u = dir.path().join("u.json");
    std::fs::write(&u, "[[[1,0],[0,0]],[[0,0],[0,1]]]").unwrap();
    let r = stdout_json(&picard(&["word", "--u2", u.to_str().unwrap()]));
    assert_eq!(r["result"]["text"], "U1·U2·U1");
}

#[test]
fn cover_single_piece() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = picard(&[
        "cover",
        "--piece",
        "5",
        "--depth",
        "0",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["result"]["piece"], 5);
    assert_eq!(r["result"]["leaf_count"], 1);
    assert_eq!(r["result"]["leaves"][0]["sphere"], "S0");
    assert_eq!(r["result"]["leaves"][0]["margin"], "2/1");
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, r["result"]);

    let out = picard(&["cover", "--piece", "9", "--depth", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let r = stdout_json(&out);
    assert_eq!(r["result"]["uncovered"].as_array().unwrap().len(), 1);
}

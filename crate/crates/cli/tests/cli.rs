//! Exit-code contract and round-trip behaviour of the binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arbopack"))
        .args(args)
        .env_remove("ARBOPACK_MAX_N")
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("arbopack-cli-test-{name}"));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_exit_codes() {
    let ok = run(&["check", "--input", golden("mixed_pair_k2.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("feasible"));

    let bad = run(&["check", "--input", golden("triangle_k2.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("condition ii"));

    let over_budget = write_temp(
        "over-budget.json",
        r#"{"vertices": ["a"], "k": 1, "f": {"a": 2}, "g": {"a": 2}}"#,
    );
    let out = run(&["check", "--input", over_budget.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("condition root-budget"));
    assert!(text.contains("root demand 2 exceeds k = 1"));
}

#[test]
fn malformed_inputs_exit_2() {
    let garbled = write_temp("garbled.json", "{ not json");
    let out = run(&["check", "--input", garbled.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let unknown = write_temp(
        "unknown-vertex.json",
        r#"{"vertices": ["a"], "edges": [["a", "z"]], "k": 1}"#,
    );
    let out = run(&["check", "--input", unknown.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let bounds = write_temp(
        "bad-bounds.json",
        r#"{"vertices": ["a", "b"], "edges": [["a", "b"]], "k": 1, "f": {"a": 2}, "g": {"a": 1}}"#,
    );
    let out = run(&["check", "--input", bounds.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));

    let usage = run(&["no-such-command"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    let out = run(&[
        "check",
        "--input",
        golden("triangle_k1.json").to_str().unwrap(),
        "--max-n",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let names: Vec<String> = (0..6).map(|i| format!("\"x{i}\"")).collect();
    let big = write_temp(
        "six-vertices.json",
        &format!(r#"{{"vertices": [{}], "k": 1}}"#, names.join(", ")),
    );
    let out = run(&["oracle", "--input", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn env_var_sets_limit_and_flag_wins() {
    let input = golden("triangle_k1.json");
    let out = Command::new(env!("CARGO_BIN_EXE_arbopack"))
        .args(["check", "--input", input.to_str().unwrap()])
        .env("ARBOPACK_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = Command::new(env!("CARGO_BIN_EXE_arbopack"))
        .args(["check", "--input", input.to_str().unwrap(), "--max-n", "5"])
        .env("ARBOPACK_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn solve_verify_round_trip() {
    for name in ["mixed_pair_k2.json", "k4_k2.json", "complete_digraph3_k2.json"] {
        let input = golden(name);
        let solved = run(&["solve", "--input", input.to_str().unwrap()]);
        assert_eq!(solved.status.code(), Some(0), "{name}");
        let packing = write_temp(
            &format!("packing-{name}"),
            &String::from_utf8(solved.stdout).unwrap(),
        );
        let verified = run(&[
            "verify",
            "--input",
            input.to_str().unwrap(),
            "--packing",
            packing.to_str().unwrap(),
        ]);
        assert_eq!(verified.status.code(), Some(0), "{name}");
    }
}

#[test]
fn traced_solve_output_still_verifies() {
    let input = golden("mixed_pair_k2.json");
    let solved = run(&["solve", "--trace", "--input", input.to_str().unwrap()]);
    assert_eq!(solved.status.code(), Some(0));
    let stdout = String::from_utf8(solved.stdout).unwrap();
    assert!(stdout.contains("\"trace\""));
    let packing = write_temp("traced-packing.json", &stdout);
    let verified = run(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--packing",
        packing.to_str().unwrap(),
    ]);
    assert_eq!(verified.status.code(), Some(0));
}

#[test]
fn tampered_packings_fail_verification() {
    let input = golden("mixed_pair_k2.json");

    // Both trees claim arc 0.
    let shared = write_temp(
        "shared-element.json",
        r#"{"trees": [
            {"root": "a", "edges": [], "arcs": [0]},
            {"root": "a", "edges": [], "arcs": [0]}
        ]}"#,
    );
    let out = run(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--packing",
        shared.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("disjointness"));

    // One tree missing entirely.
    let short = write_temp(
        "short-packing.json",
        r#"{"trees": [{"root": "a", "edges": [], "arcs": [0]}]}"#,
    );
    let out = run(&[
        "verify",
        "--input",
        input.to_str().unwrap(),
        "--packing",
        short.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("tree-count"));
}

#[test]
fn oracle_command_reports_existence() {
    let yes = run(&["oracle", "--input", golden("triangle_k1.json").to_str().unwrap()]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&yes.stdout).contains("\"exists\": true"));

    let no = run(&["oracle", "--input", golden("triangle_k2.json").to_str().unwrap()]);
    assert_eq!(no.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&no.stdout).contains("\"exists\": false"));
}

#[test]
fn pieo_trace_round_trip() {
    let doc = write_temp(
        "pieo.json",
        r#"{"ground": ["1", "2", "3", "4"],
            "f1": [["1", "2"], ["3", "4"]],
            "f2": [["2", "3"]]}"#,
    );
    let out = run(&["pieo-trace", "--input", doc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["maximal"], serde_json::json!([["1", "2", "3", "4"]]));
    assert_eq!(value["remainder"], serde_json::json!([["2"], ["3"]]));
    assert_eq!(value["steps"].as_array().unwrap().len(), 2);

    let overlapping = write_temp(
        "pieo-bad.json",
        r#"{"ground": ["1", "2"], "f1": [["1", "2"], ["2"]], "f2": []}"#,
    );
    let out = run(&["pieo-trace", "--input", overlapping.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

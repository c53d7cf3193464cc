//! Black-box tests of the `mcd` binary: exit codes, JSON output
//! shape, and output determinism.

use std::io::Write;
use std::process::{Command, Output};

fn mcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_example_d() {
    let out = mcd(&[
        "analyze", "--group", "Z4", "--s0", "2", "--s1", "2", "--t0", "0,1", "--t1", "0,2",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["connectivity"]["lambda"], 2);
    assert_eq!(doc["connectivity"]["delta"], 3);
    assert_eq!(doc["connectivity"]["is_max_lambda"], false);
    assert_eq!(doc["gamma"]["class_id"], "2");
}

#[test]
fn analyze_symmetric_cycle_labels() {
    let out = mcd(&[
        "analyze", "--group", "Z2", "--s0", "1", "--s1", "1", "--t0", "0", "--t1", "0",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["connectivity"]["is_super_lambda"], false);
    let labels: Vec<String> = doc["family_labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(labels, vec!["symmetric_cycle", "family_f"]);
}

#[test]
fn not_strong_exits_with_2() {
    let out = mcd(&["analyze", "--group", "Z2", "--t0", "0", "--t1", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn classify_example_d() {
    let out = mcd(&[
        "classify", "--group", "Z4", "--s0", "2", "--s1", "2", "--t0", "0,1", "--t1", "0,2",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["max_lambda"]["not_max_lambda"], true);
    assert_eq!(doc["max_lambda"]["condition"], 2);
    assert_eq!(doc["max_lambda"]["witness"]["h"], serde_json::json!([0, 2]));
}

#[test]
fn classify_example_e() {
    let out = mcd(&[
        "classify", "--group", "Z4", "--s0", "2", "--s1", "1,3", "--t0", "0", "--t1", "0",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["max_lambda"]["not_max_lambda"], false);
    assert_eq!(doc["super_lambda"]["not_super_lambda"], true);
    assert_eq!(doc["super_lambda"]["condition"], 1);
    assert_eq!(doc["super_lambda"]["class_names"], "G");
}

#[test]
fn export_dot_is_deterministic() {
    let args = [
        "export", "--group", "Z3", "--s0", "1", "--t0", "0", "--t1", "0",
    ];
    let a = mcd(&args);
    let b = mcd(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("->"));
}

#[test]
fn export_json_shape() {
    let out = mcd(&[
        "export", "--format", "json", "--group", "Z3", "--s0", "1", "--t0", "0", "--t1", "0",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["vertex_count"], 6);
    // Arc count: 2n·|T| for the bi-Cayley part plus n per layer set.
    assert_eq!(doc["arcs"].as_array().unwrap().len(), 3 + 3 + 3);
    assert_eq!(doc["vertex_labels"][0], "0.0");
}

#[test]
fn export_unknown_format_exits_with_1() {
    let out = mcd(&[
        "export", "--format", "svg", "--group", "Z3", "--s0", "1", "--t0", "0", "--t1", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_element_index_exits_with_1() {
    let out = mcd(&["analyze", "--group", "Z2", "--t0", "5", "--t1", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn crosscheck_clean_space_exits_with_0_and_is_deterministic() {
    let args = [
        "crosscheck",
        "--groups",
        "Z2",
        "--s-max",
        "1",
        "--t-max",
        "1",
    ];
    let a = mcd(&args);
    let b = mcd(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc = stdout_json(&a);
    assert_eq!(doc["mismatches"].as_array().unwrap().len(), 0);
    assert!(doc["counters"]["instances_strong"].as_u64().unwrap() > 0);
}

#[test]
fn crosscheck_space_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let spec = serde_json::json!({
        "groups": ["Z3"],
        "s_max": 1,
        "t_min": 1,
        "t_max": 1,
        "require_strong": true,
        "sample_limit": null,
        "seed": 0
    });
    write!(file, "{spec}").unwrap();
    let path = file.path().to_str().unwrap();
    let out = mcd(&["crosscheck", "--space-file", path]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["space"]["groups"], serde_json::json!(["Z3"]));
    assert_eq!(doc["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn crosscheck_requires_groups_or_space_file() {
    let out = mcd(&["crosscheck"]);
    assert!(out.status.success() || out.status.code() == Some(1));
    // An empty group list is an empty (clean) space, not an error.
    if out.status.success() {
        let doc = stdout_json(&out);
        assert_eq!(doc["counters"]["instances_total"], 0);
    }
}

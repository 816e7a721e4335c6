use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sqfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqfree")).args(args).env_remove("SQFREE_OUT_DIR").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    let out = sqfree(&["equality", "--ideal", "corpus:bad", "-n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["payload"][0]["witness"], "x1*x2*x3*x4*x5*x6");

    assert_eq!(sqfree(&["equality", "--ideal", "corpus:bad_plus_456", "-n", "2"]).status.code(), Some(0));
    assert_eq!(sqfree(&["application", "--which", "1", "-p", "9"]).status.code(), Some(0));
    assert_eq!(sqfree(&["application", "--which", "1", "-p", "7"]).status.code(), Some(1));
    assert_eq!(sqfree(&["application", "--which", "3", "-p", "7"]).status.code(), Some(2));
    assert_eq!(sqfree(&["equality", "--ideal", "corpus:nope", "-n", "2"]).status.code(), Some(2));
}

#[test]
fn malformed_input_reports_its_json_path() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "dup.json", r#"{"vertices": 3, "edges": [[1, 2], [2, 2]]}"#);
    let out = sqfree(&["validate", "--hypergraph", &file]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("$.edges[1]"));

    let file = write(dir.path(), "loose.json", r#"{"vertices": 4, "edges": [[1, 2]]}"#);
    assert_eq!(sqfree(&["validate", "--hypergraph", &file]).status.code(), Some(0));
    assert_eq!(sqfree(&["validate", "--hypergraph", &file, "--strict"]).status.code(), Some(2));
}

#[test]
fn guards_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let edges: Vec<[usize; 2]> = (1..=15).map(|i| [i, i % 15 + 1]).collect();
    let file = write(dir.path(), "c15.json", &serde_json::json!({ "vertices": 15, "edges": edges }).to_string());
    let out = sqfree(&["packing", "--hypergraph", &file]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn validate_round_trips_the_bad_hypergraph() {
    let out = sqfree(&["validate", "--hypergraph", "corpus:bad", "--strict"]);
    assert_eq!(out.status.code(), Some(0));
    let canonical = json(&out);
    let corpus: Value = serde_json::from_slice(&sqfree(&["corpus", "bad"]).stdout).unwrap();
    let edge_set = |v: &Value| {
        let mut e: Vec<String> = v["edges"].as_array().unwrap().iter().map(|e| e.to_string()).collect();
        e.sort();
        e
    };
    assert_eq!(canonical["vertices"], corpus["vertices"]);
    assert_eq!(edge_set(&canonical), edge_set(&corpus));

    let dir = tempfile::tempdir().unwrap();
    let again = write(dir.path(), "canonical.json", &canonical.to_string());
    assert_eq!(json(&sqfree(&["validate", "--hypergraph", &again, "--strict"])), canonical);
}

#[test]
fn classify_cubic_on_cycles() {
    let out = sqfree(&["classify-cubic", "--graph", "corpus:c9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["payload"]["predicted"], true);
    let out = sqfree(&["classify-cubic", "--graph", "corpus:c7"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["payload"]["consistent"], true);
}

#[test]
fn certificates_verify_and_detect_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("certs");
    let out = sqfree(&["--out-dir", out_dir.to_str().unwrap(), "packing", "--hypergraph", "corpus:bad"]);
    assert_eq!(out.status.code(), Some(1));
    let files: Vec<_> = std::fs::read_dir(&out_dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    let cert = files[0].to_str().unwrap();
    assert_eq!(sqfree(&["verify", "--certificate", cert]).status.code(), Some(0));

    let mut value: Value = serde_json::from_str(&std::fs::read_to_string(cert).unwrap()).unwrap();
    value["holds"] = Value::Bool(true);
    let tampered = write(dir.path(), "tampered.json", &value.to_string());
    let out = sqfree(&["verify", "--certificate", &tampered]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["valid"], false);
}

#[test]
fn payloads_are_deterministic() {
    let strip = |out: Output| {
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("timestamp");
        v
    };
    let args = ["mengerian", "--hypergraph", "corpus:h3_c7", "--cmax", "1"];
    assert_eq!(strip(sqfree(&args)), strip(sqfree(&args)));
}

#[test]
fn repro_writes_verifiable_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let out = sqfree(&["--out-dir", dir.path().to_str().unwrap(), "repro", "section1"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{stdout}");
    let certs: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    assert!(!certs.is_empty());
    assert!(!std::fs::read_dir(dir.path()).unwrap().any(|e| e.unwrap().file_name().to_string_lossy().ends_with(".tmp")));
    for c in certs {
        let text = std::fs::read_to_string(&c).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        if v.get("instance_digest").is_some() {
            assert_eq!(sqfree(&["verify", "--certificate", c.to_str().unwrap()]).status.code(), Some(0), "{}", c.display());
        }
    }
}

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use wha_cli::{run_command, EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_PARSE};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let o = run_command(std::iter::once("wha").chain(args.iter().copied()));
    (o.code, o.output)
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

fn failed_names(report: &Value) -> Vec<String> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| !c["passed"].as_bool().unwrap())
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn verify_passes_on_examples() {
    for f in ["s3.alg.json", "pair.alg.json", "z2.alg.json", "trivial.alg.json", "dz2.alg.json", "discrete2.alg.json"] {
        let (code, rep) = json(&["verify", &data(f)]);
        assert_eq!(code, EXIT_OK, "{f}: {:?}", failed_names(&rep));
        assert_eq!(rep["passed"], true);
        assert_eq!(rep["schema_version"], 1);
        assert_eq!(rep["input_sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn mutants_fail_with_named_checks() {
    let (code, rep) = json(&["verify", &data("broken-axiom4.alg.json")]);
    assert_eq!(code, EXIT_FAILED);
    let bad = rep["checks"].as_array().unwrap().iter().find(|c| c["name"] == "axiom 4").unwrap();
    assert_eq!(bad["passed"], false);
    assert!(bad["witness"].as_str().unwrap().starts_with('b'));

    let (code, rep) = json(&["verify", &data("broken-qt.alg.json")]);
    assert_eq!(code, EXIT_FAILED);
    assert!(failed_names(&rep).contains(&"R intertwiner".to_string()));
    assert!(rep["checks"].as_array().unwrap().iter().all(|c| c["suite"] != "braided group"));
}

#[test]
fn decompose_and_enumerate_s3() {
    let (code, rep) = json(&["decompose", &data("s3.alg.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(rep["decomposition"]["component_dims"], serde_json::json!([1, 2, 3]));

    let (code, rep) = json(&["enumerate-yd", &data("s3.alg.json")]);
    assert_eq!(code, EXIT_OK);
    let en = &rep["enumeration"];
    assert_eq!(en["simple_count"], 8);
    assert_eq!(en["simple_dims"], serde_json::json!([1, 1, 2, 2, 2, 2, 3, 3]));
    assert_eq!(en["sum_of_squares"], 36);
}

#[test]
fn groupoid_user_module() {
    let (code, rep) = json(&["enumerate-yd", &data("pair.alg.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(rep["enumeration"]["all_constructed"], false);
    let (code, rep) = json(&["enumerate-yd", &data("pair.alg.json"), "--modules", &data("pair.modules.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(rep["enumeration"]["all_constructed"], true);
    assert_eq!(rep["enumeration"]["simple_dims"], serde_json::json!([2]));
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["enumerate-yd", "--seed", "7"],
        vec!["decompose", "--format", "text"],
        vec!["verify", "--precision", "128", "--height-bound", "1000"],
    ] {
        let mut a = args.clone();
        let f = data("s3.alg.json");
        a.push(&f);
        assert_eq!(run(&a), run(&a));
    }
    let (_, with_timing) = json(&["verify", "--timing", &data("z2.alg.json")]);
    assert!(with_timing["timing"].as_array().is_some_and(|t| !t.is_empty()));
    let (_, without) = json(&["verify", &data("z2.alg.json")]);
    assert!(without.get("timing").is_none());
}

#[test]
fn example_builds_match_corpus() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, table, alg) in [
        ("group", "s3.group.json", "s3.alg.json"),
        ("groupoid", "pair.groupoid.json", "pair.alg.json"),
        ("double", "z2.group.json", "dz2.alg.json"),
    ] {
        let out = dir.path().join(alg);
        let o = run_command(["wha", "example", kind, &data(table), "--out", out.to_str().unwrap()]);
        assert_eq!(o.code, EXIT_OK);
        assert!(!o.to_stdout);
        assert_eq!(fs::read_to_string(&out).unwrap(), fs::read_to_string(data(alg)).unwrap());
    }
    let (code, out) = run(&["example", "group", &data("z3.group.json"), "--field", "rationals"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"rationals\""));
    let (code, out) = run(&["example", "group", &data("z3.group.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"order\": 3"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("bad.json");
    fs::write(&garbage, "{\"format_version\": 1}").unwrap();
    assert_eq!(run(&["verify", garbage.to_str().unwrap()]).0, EXIT_PARSE);
    assert_eq!(run(&["verify", "--format", "yaml", &data("z2.alg.json")]).0, EXIT_PARSE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_PARSE);
    assert_eq!(run(&["example", "group", &data("pair.groupoid.json")]).0, EXIT_PARSE);
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["verify", missing.to_str().unwrap()]).0, EXIT_IO);
    let unwritable = dir.path().join("no/such/dir/out.json");
    assert_eq!(run(&["verify", &data("z2.alg.json"), "--out", unwritable.to_str().unwrap()]).0, EXIT_IO);
}

#[test]
fn binary_writes_report_and_exit_code() {
    let bin = env!("CARGO_BIN_EXE_wha");
    let out = Command::new(bin).args(["verify", &data("broken-axiom4.alg.json"), "--format", "text"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_FAILED));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL  [weak Hopf] axiom 4"));
    assert!(String::from_utf8(out.stderr).unwrap().contains("axiom 4"));
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_automizer-lab"))
        .args(args)
        .env_remove("AUTOMIZER_LAB_CATALOG")
        .current_dir(env!("CARGO_TARGET_TMPDIR"))
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "{}", stderr(out));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn write(dir: &Path, name: &str, value: &Value) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path
}

fn s4_table(dir: &Path) -> PathBuf {
    let out = lab(&["catalog", "describe", "S4", "--format", "json"]);
    let doc = json_of(&out);
    let table = doc["entry"]["group"]["table"].clone();
    assert!(table.is_array(), "{doc}");
    write(dir, "s4.json", &json!({ "name": "S4", "order": 24, "table": table }))
}

#[test]
fn check_table_file_with_filter() {
    let dir = tempfile::tempdir().unwrap();
    let path = s4_table(dir.path());
    let out = lab(&["check", path.to_str().unwrap(), "--properties", "pnc,cp", "--format", "json"]);
    let report = json_of(&out);
    let props = report["properties"].as_object().unwrap();
    assert_eq!(props.keys().collect::<Vec<_>>(), ["cp", "pnc"]);
    assert_eq!(props["pnc"]["value"], true);
    assert_eq!(props["cp"]["value"], true);
}

#[test]
fn check_trivial_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "trivial.json", &json!({ "order": 1, "table": [[0]] }));
    let report = json_of(&lab(&["check", path.to_str().unwrap(), "--format", "json"]));
    for (name, v) in report["properties"].as_object().unwrap() {
        let expected = name != "minimal_non_nilpotent";
        assert_eq!(v["value"], expected, "{name}");
    }
}

#[test]
fn malformed_table_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", &json!({ "order": 2, "table": [[0, 1], [0, 1]] }));
    let out = lab(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Latin"), "{}", stderr(&out));
}

#[test]
fn check_from_permutation_generators() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "a4.json", &json!({ "degree": 4, "generators": ["(1 2 3)", "(1 2)(3 4)"] }));
    let report =
        json_of(&lab(&["check", path.to_str().unwrap(), "--properties", "pnc,supersolvable", "--format", "json"]));
    assert_eq!(report["order"], 12);
    assert_eq!(report["properties"]["pnc"]["value"], true);
    assert_eq!(report["properties"]["supersolvable"]["value"], false);
}

#[test]
fn unknown_property_is_an_error() {
    let out = lab(&["check", "S3", "--properties", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bogus"));
}

#[test]
fn automizer_of_a3_in_s3() {
    let out = lab(&["automizer", "S3", "--gen", "(1,2,3)", "--format", "json"]);
    let s = json_of(&out);
    assert_eq!(s["subgroup_order"], 3);
    assert_eq!(s["normalizer_order"], 6);
    assert_eq!(s["centralizer_order"], 3);
    assert_eq!(s["automizer_order"], 2);
    assert_eq!(s["large"], true);
    assert_eq!(s["small"], false);
}

#[test]
fn automizer_in_abelian_group_is_trivial() {
    let s = json_of(&lab(&["automizer", "Z12", "--gen", "4", "--format", "json"]));
    assert_eq!(s["automizer_order"], 1);
    assert_eq!(s["small"], true);
}

#[test]
fn automizer_of_a3_x_z2_in_s4_x_z2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "s4xz2.json", &json!({ "degree": 6, "generators": ["(1 2 3 4)", "(1 2)", "(5 6)"] }));
    let out = lab(&["automizer", path.to_str().unwrap(), "--gen", "(1 2 3)(5 6)"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("|H|        6"), "{text}");
    assert!(text.contains("small      false"), "{text}");
}

#[test]
fn generator_outside_group_is_an_error() {
    let out = lab(&["automizer", "S3", "--gen", "(1 2 3 4)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_default_catalog_passes() {
    let out = lab(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("0 failed"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("C3.15  pass")), "{text}");
}

#[test]
fn verify_only_runs_the_selection() {
    let results = json_of(&lab(&["verify", "--only", "C3.15", "--format", "json"]));
    let results = results.as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["id"], "C3.15");
    assert_eq!(results[0]["instances"], 30);
}

#[test]
fn unknown_verifier_is_rejected_at_parse_time() {
    let out = lab(&["verify", "--only", "C3.15,X9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("X9"));
}

#[test]
fn caps_must_be_positive() {
    let out = lab(&["verify", "--cap-closure", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn injected_fault_fails_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    let built = lab(&["--catalog", path.to_str().unwrap(), "catalog", "build"]);
    assert!(built.status.success(), "{}", stderr(&built));

    let mut catalog: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let entry = catalog.as_array_mut().unwrap().iter_mut().find(|e| e["name"] == "S4xZ2").unwrap();
    let tags = entry["tags"].as_array_mut().unwrap();
    tags.retain(|t| t != "!pnc");
    tags.push(json!("pnc"));
    fs::write(&path, serde_json::to_string(&catalog).unwrap()).unwrap();

    let out = lab(&["--catalog", path.to_str().unwrap(), "verify", "--only", "TAGS"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("TAGS failure on S4xZ2"), "{}", stdout(&out));
}

#[test]
fn catalog_build_list_and_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("built.json");
    assert!(lab(&["--catalog", path.to_str().unwrap(), "catalog", "build"]).status.success());

    let out = Command::new(env!("CARGO_BIN_EXE_automizer-lab"))
        .args(["catalog", "list", "--format", "json"])
        .env("AUTOMIZER_LAB_CATALOG", &path)
        .output()
        .unwrap();
    let rows = json_of(&out);
    assert!(rows.as_array().unwrap().len() >= 60);

    let missing = Command::new(env!("CARGO_BIN_EXE_automizer-lab"))
        .args(["catalog", "list"])
        .env("AUTOMIZER_LAB_CATALOG", dir.path().join("absent.json"))
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn describe_entry_and_unknown_entry() {
    let doc = json_of(&lab(&["catalog", "describe", "S3xZ3", "--format", "json"]));
    assert_eq!(doc["report"]["order"], 18);
    assert_eq!(doc["report"]["properties"]["pnc"]["value"], true);

    let out = lab(&["catalog", "describe", "NoSuchGroup"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let a = lab(&["check", "S4xZ2", "--format", "json"]);
    let b = lab(&["check", "S4xZ2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

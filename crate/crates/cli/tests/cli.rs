use serde_json::Value;
use std::process::{Command, Output};

fn whakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whakit")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn zoo_file(dir: &std::path::Path, name: &str) -> Value {
    let out = whakit(&["zoo", name, "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    serde_json::from_str(&std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap()).unwrap()
}

fn tmp(tag: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("whakit-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn validate_zoo_z2_passes() {
    let out = whakit(&["validate", "zoo:Z2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["pass"], true);
    let ids: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["identity"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn antipode_rebuilds_z3_inverse() {
    let dir = tmp("antipode");
    let mut f = zoo_file(&dir, "Z3");
    f.as_object_mut().unwrap().remove("antipode");
    let input = dir.join("stripped.json");
    std::fs::write(&input, serde_json::to_string(&f).unwrap()).unwrap();
    let output = dir.join("rebuilt.json");
    let out = whakit(&["antipode", input.to_str().unwrap(), "-o", output.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let w: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    // column 1 is S(g); it should be g^2
    let s = w["antipode"].as_array().unwrap();
    let col: Vec<&str> = s.iter().map(|row| row[1].as_str().unwrap()).collect();
    assert_eq!(col, ["0", "0", "1"]);
    let v = whakit(&["validate", output.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn non_coassociative_file_fails_with_witness() {
    let dir = tmp("coassoc");
    let mut f = zoo_file(&dir, "Z3");
    f["comult"].as_array_mut().unwrap().push(serde_json::json!([1, 0, 0, "1"]));
    let input = dir.join("bad.json");
    std::fs::write(&input, serde_json::to_string(&f).unwrap()).unwrap();
    let out = whakit(&["validate", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let bad = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["pass"] == false && c["identity"].as_str().unwrap().contains("coassoc"))
        .expect("a failed coassociativity check");
    assert!(!bad["witness"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_input_exits_2() {
    let dir = tmp("malformed");
    let input = dir.join("junk.json");
    std::fs::write(&input, "{\"format\":\"whakit/1\"}").unwrap();
    assert_eq!(whakit(&["validate", input.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(whakit(&["validate", "zoo:NOPE"]).status.code(), Some(2));
    assert_eq!(whakit(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn f2m2_dispatches_over_f2() {
    let out = whakit(&["validate", "zoo:F2M2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cyclic_respects_max_degree_and_pair() {
    let out = whakit(&["cyclic", "zoo:Z2", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["summary"]["cochain_dims"], serde_json::json!([1, 2, 4]));
    assert_eq!(r["summary"]["involution"], true);
    // s = 1 gives a non-involutive pair on H4; the τ relations fail
    let out = whakit(&["cyclic", "zoo:H4", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dualize_twice_is_identity_on_z2() {
    let dir = tmp("dual");
    let once = dir.join("once.json");
    let twice = dir.join("twice.json");
    assert!(whakit(&["dualize", "zoo:Z2", "-o", once.to_str().unwrap()]).status.success());
    assert!(whakit(&["validate", once.to_str().unwrap()]).status.success());
    assert!(whakit(&["dualize", once.to_str().unwrap(), "-o", twice.to_str().unwrap()]).status.success());
    let z2 = zoo_file(&dir, "Z2");
    let back: Value = serde_json::from_str(&std::fs::read_to_string(&twice).unwrap()).unwrap();
    assert_eq!(z2["mult"], back["mult"]);
    assert_eq!(z2["comult"], back["comult"]);
}

#[test]
fn grouplike_element_flag() {
    let out = whakit(&["grouplike", "zoo:Z3", "--element", "[\"0\",\"1\",\"0\"]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["summary"]["grouplike"]["kind"], "both");
    let out = whakit(&["grouplike", "zoo:Z3", "--element", "[\"1\",\"1\",\"0\"]"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zoo_list_names_entries() {
    let r = report(&whakit(&["zoo", "--list"]));
    assert!(r["summary"].as_array().unwrap().iter().any(|n| n == "M2Q"));
}

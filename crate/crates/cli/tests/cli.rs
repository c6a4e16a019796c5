use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn ajpk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ajpk")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn clans_enum() {
    let out = ajpk(&["clans", "enum", "2", "1"]);
    assert!(out.status.success());
    let v = json(&out);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["clan"].as_str().unwrap()).collect();
    assert_eq!(names, ["++-", "+-+", "-++", "+11", "11+", "1+1"]);
}

#[test]
fn clans_other_commands() {
    assert_eq!(json(&ajpk(&["clans", "length", "(1+1)"])), 3);
    let hasse = json(&ajpk(&["clans", "hasse", "1", "1"]));
    assert_eq!(hasse.as_array().unwrap().len(), 2);
    let packets = json(&ajpk(&["clans", "packets", "2", "1"]));
    assert_eq!(packets.as_array().unwrap().len(), 4);
    assert_eq!(ajpk(&["clans", "length", "(1+2)"]).status.code(), Some(2));
}

#[test]
fn sym_commands() {
    assert_eq!(json(&ajpk(&["sym", "theta-length", "[2,1]"])), 1);
    assert_eq!(json(&ajpk(&["sym", "involutions", "4"])).as_array().unwrap().len(), 10);
    let w = json(&ajpk(&["sym", "verify-lemma65", "4"]));
    assert_eq!(w["covers"].as_array().unwrap().len(), 9);
    assert_eq!(ajpk(&["sym", "theta-length", "[2,3,1]"]).status.code(), Some(2));
    assert_eq!(ajpk(&["sym", "verify-lemma65", "1"]).status.code(), Some(2));
}

#[test]
fn verify_example() {
    let out = ajpk(&["verify", &data("example_speh_n2_p3.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "match");
    assert_eq!(v["lhs"].as_array().unwrap().len(), 2);
    let u = ajpk(&["verify", &data("unitary_n2_p2.json")]);
    assert_eq!(u.status.code(), Some(0));
    let t = ajpk(&["verify", &data("tail_atom.json")]);
    assert_eq!(json(&t)["status"], "match");
}

#[test]
fn expand_and_lhs_agree() {
    for f in ["example_speh_n2_p3.json", "tail_atom.json"] {
        let a = ajpk(&["expand", &data(f)]);
        let b = ajpk(&["lhs", &data(f)]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn invalid_input_exits_2() {
    let out = ajpk(&["verify", &data("bad_parity.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parity"));
    assert_eq!(ajpk(&["verify", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(ajpk(&["frobnicate"]).status.code(), Some(2));
    let info = ajpk(&["info", &data("bad_parity.json")]);
    assert!(info.status.success());
    assert_eq!(json(&info)["valid"], false);
}

#[test]
fn info_reports() {
    let v = json(&ajpk(&["info", &data("example_speh_n2_p3.json")]));
    assert_eq!(v["valid"], true);
    assert_eq!(v["N"], 4);
    assert_eq!(v["q_star"], 1);
    assert_eq!(v["infinitesimal_character"], serde_json::json!(["-2", "-1", "1", "2"]));
}

#[test]
fn stdin_and_pretty() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ajpk"))
        .args(["--pretty", "verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let text = std::fs::read(data("example_speh_n2_p3.json")).unwrap();
    child.stdin.take().unwrap().write_all(&text).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\n  \"status\": \"match\""));
}

#[test]
fn output_is_deterministic() {
    let a = ajpk(&["verify", &data("tail_atom.json")]);
    let b = ajpk(&["verify", &data("tail_atom.json")]);
    assert_eq!(a.stdout, b.stdout);
    let c = ajpk(&["clans", "hasse", "2", "2"]);
    let d = ajpk(&["clans", "hasse", "2", "2"]);
    assert_eq!(c.stdout, d.stdout);
}

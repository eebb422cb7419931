use std::process::{Command, Output};

use ncwitt::freealg::Alphabet;
use ncwitt::parse::parse_poly;
use serde_json::Value;

fn ncwitt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncwitt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = ncwitt(&all);
    serde_json::from_slice(&out.stdout).expect("valid json")
}

/// Same polynomial, whatever the term order in the text.
fn same_poly(a: &str, b: &str) -> bool {
    let xy = Alphabet::xy();
    parse_poly(a, &xy).unwrap() == parse_poly(b, &xy).unwrap()
}

#[test]
fn ghost_of_a_commutator() {
    let out = ncwitt(&["ghost", "--p", "2", "--level", "2", "XY-YX", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(0, -2[XXYY] + 2[XYXY])");
}

#[test]
fn omega_at_level_one() {
    let out = ncwitt(&["omega", "--p", "2", "--level", "1", "X", "Y"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(X, X^2 + 2Y)");
}

#[test]
fn rmap_reproduces_the_counterexample_coordinates() {
    let v = json(&["rmap", "--p", "2", "--level", "2", "XY-YX", "0"]);
    assert_eq!(v["command"], "rmap");
    let coords = v["result"]["coordinates"].as_array().unwrap();
    assert!(same_poly(coords[0].as_str().unwrap(), "XY - YX"));
    assert!(same_poly(coords[1].as_str().unwrap(), "-XYXY + XXYY"));
    assert_eq!(v["result"]["audit"][0]["divisor"], "2");
}

#[test]
fn missing_coordinates_are_zero() {
    let out = ncwitt(&["ghost", "--level", "3", "X"]);
    assert_eq!(stdout(&out), "([X], [XX], [XXXX])");
}

#[test]
fn json_shape_is_stable() {
    let v = json(&["abelianize", "YX - XY + XXY"]);
    assert_eq!(v["command"], "abelianize");
    assert_eq!(v["params"]["p"], 2);
    assert_eq!(v["params"]["level"], 2);
    assert_eq!(v["params"]["alphabet"], serde_json::json!(["X", "Y"]));
    assert_eq!(v["result"], "[XXY]");
}

#[test]
fn hmember_answers_both_ways() {
    assert_eq!(
        stdout(&ncwitt(&["hmember", "-XYXY + YXYX - XYYX - YXXY + 2XXYY"])),
        "false"
    );
    assert_eq!(stdout(&ncwitt(&["hmember", "XXYY + 2XY + X^5"])), "true");
}

#[test]
fn multi_character_alphabet_needs_explicit_products() {
    let out = ncwitt(&["abelianize", "--alphabet", "u,v1", "u*v1 - v1*u"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0");
    assert_eq!(
        ncwitt(&["abelianize", "--alphabet", "u,v1", "u v1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    // parse errors and bad flags are usage errors
    let out = ncwitt(&["ghost", "X + Z"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown generator"));
    assert_eq!(ncwitt(&["ghost", "--p", "4", "X"]).status.code(), Some(2));
    assert_eq!(
        ncwitt(&["ghost", "--level", "1", "X", "Y"]).status.code(),
        Some(2)
    );
    assert_eq!(ncwitt(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ncwitt(&["verify"]).status.code(), Some(2));
    assert_eq!(ncwitt(&["verify", "no-such-check"]).status.code(), Some(2));
    // a non-commutator input to R is a computation failure
    assert_eq!(ncwitt(&["rmap", "XY", "0"]).status.code(), Some(1));
    // H is only defined for two generators
    assert_eq!(
        ncwitt(&["hmember", "--alphabet", "T", "T"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_single_check() {
    let out = ncwitt(&["verify", "lemma-xyc"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS lemma-xyc"));
}

#[test]
fn verify_counterexample_as_json() {
    let v = json(&["verify", "counterexample", "--level", "3"]);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["report"]["status"], "pass");
    let checks = v["report"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["check_id"], "counterexample");
    assert_eq!(checks[0]["details"][0], "p = 2, level 3");
}

#[test]
fn verify_all_passes_and_is_ordered_by_id() {
    let v = json(&["verify", "--all", "--p", "2"]);
    assert_eq!(v["report"]["status"], "pass");
    let ids: Vec<&str> = v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["check_id"].as_str().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), 9);
}

#[test]
fn verify_is_deterministic_and_seeded() {
    let a = stdout(&ncwitt(&["verify", "wagen", "pin", "--format", "json"]));
    let b = stdout(&ncwitt(&["verify", "wagen", "pin", "--format", "json"]));
    assert_eq!(a, b);
    let c = json(&["verify", "wagen", "--seed", "99"]);
    assert_eq!(c["params"]["seed"], 99);
    assert_eq!(c["report"]["status"], "pass");
}

#[test]
fn verify_at_p_three() {
    let out = ncwitt(&[
        "verify",
        "wagen",
        "pin",
        "bracket-identity",
        "omegar0",
        "--p",
        "3",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
}

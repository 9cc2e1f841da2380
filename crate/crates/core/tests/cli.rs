use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use qgrass::polyring::{Polynomial, XVar};
use qgrass::PluckerVar;

fn qgrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qgrass(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn degree_of_c1_23() {
    assert_eq!(stdout(&["degree", "--p", "2", "--m", "3", "--q", "1"]), "55\n");
    let j: Value = serde_json::from_str(&stdout(&[
        "degree", "--p", "2", "--m", "3", "--q", "1", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(j["maximal_chains"], "55");
}

#[test]
fn straighten_reproduces_golden() {
    let out = stdout(&[
        "straighten",
        "--p",
        "3",
        "--m",
        "3",
        "--n",
        "1",
        "156^1",
        "234^2",
        "--compact",
    ]);
    assert_eq!(out, golden("straighten_156_1_234_2.txt"));
    let general = stdout(&["straighten", "--p", "3", "--m", "3", "--n", "1", "156^1", "234^2"]);
    assert!(general.starts_with("1,5,6^1*2,3,4^2 - 1,4,6^1*2,3,5^2"));
    let parsed = Polynomial::<PluckerVar>::parse_text(&general).unwrap();
    assert_eq!(parsed.to_text(true) + "\n", out);
}

#[test]
fn phi_reproduces_golden() {
    let out = stdout(&["phi", "456^2", "--p", "3", "--m", "3", "--n", "1"]);
    let f = Polynomial::<XVar>::parse_text(&out).unwrap();
    assert_eq!(f, Polynomial::parse_text(&golden("phi_456_2.txt")).unwrap());
    assert!(out.starts_with("-x[3,6,0]*x[1,5,1]*x[2,4,1] + "));
}

#[test]
fn small_poset_listing() {
    // C(2,1) = 2 elements
    assert_eq!(
        stdout(&["poset", "list", "--p", "1", "--m", "1", "--q", "0"]),
        "1^0\n2^0\n"
    );
    assert_eq!(stdout(&["poset", "pairs", "--p", "1", "--m", "3", "--q", "2"]), "");
    assert_eq!(
        stdout(&["poset", "rank", "2,3,5^2", "--p", "3", "--m", "4", "--q", "2"]),
        "18\n"
    );
    let pairs = stdout(&["poset", "pairs", "--p", "3", "--m", "3", "--q", "1"]);
    assert_eq!(pairs.lines().count(), 106);
}

#[test]
fn pi_and_psi() {
    assert_eq!(
        stdout(&["pi", "235^2", "--p", "3", "--m", "4", "--n", "2", "--q", "2"]),
        golden("pi_235_2_m4.txt")
    );
    assert_eq!(
        stdout(&["psi", "235^2", "--p", "3", "--m", "3", "--n", "1"]),
        "x[3,5,0]*x[1,3,1]*x[2,2,1]\n"
    );
}

#[test]
fn skew_groebner_basis() {
    let out = stdout(&[
        "groebner",
        "--p",
        "3",
        "--m",
        "3",
        "--n",
        "1",
        "--interval",
        "146^1",
        "235^2",
        "--compact",
    ]);
    assert_eq!(out.lines().count(), 18);
    assert!(out.lines().any(|l| l == "346^1*125^2 - 246^1*135^2 + 146^1*235^2"));
    let sch = stdout(&[
        "schubert", "235^2", "--skew", "146^1", "--p", "3", "--m", "3", "--n", "1", "--format", "json",
    ]);
    let j: Value = serde_json::from_str(&sch).unwrap();
    assert_eq!(j["images"].as_array().unwrap().len(), 12);
    assert_eq!(j["zeroed"].as_array().unwrap().len(), 36 - 8);
}

#[test]
fn sagbi_and_obvious_reports() {
    let j: Value = serde_json::from_str(&stdout(&[
        "sagbi-check",
        "--p",
        "2",
        "--m",
        "3",
        "--n",
        "1",
        "--q",
        "2",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(j["pairs_total"], 25);
    assert_eq!(j["failures"].as_array().unwrap().len(), 0);
    let j: Value = serde_json::from_str(&stdout(&[
        "obvious", "--rank", "--p", "3", "--m", "3", "--q", "1", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(
        (j["rank"].as_u64(), j["kernel_dim"].as_u64(), j["deficit"].as_u64()),
        (Some(105), Some(106), Some(1))
    );
}

#[test]
fn syzygies() {
    let w = stdout(&[
        "syzygy",
        "w",
        "156^1",
        "234^2",
        "--p",
        "3",
        "--m",
        "3",
        "--n",
        "1",
        "--compact",
    ]);
    assert_eq!(Polynomial::<PluckerVar>::parse_text(&w).unwrap().len(), 10);
    let v = stdout(&[
        "syzygy",
        "v",
        "156^1",
        "234^2",
        "--p",
        "3",
        "--m",
        "3",
        "--n",
        "1",
        "--compact",
    ]);
    assert_eq!(v, golden("straighten_156_1_234_2.txt"));
}

/// Structural validation against `schemas/polynomial.json`.
fn validate_polynomial_json(j: &Value, schema: &Value) {
    let universes: Vec<&str> = schema["properties"]["vars"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    let obj = j.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["terms", "vars"]);
    assert!(universes.contains(&j["vars"].as_str().unwrap()));
    let coeff = regex_like_coefficient;
    for t in j["terms"].as_array().unwrap() {
        assert!(coeff(t["c"].as_str().unwrap()), "{t}");
        for f in t["m"].as_array().unwrap() {
            let nums = f.as_array().unwrap();
            assert!(nums.len() >= 2);
            assert!(nums.iter().all(|x| x.as_u64().is_some()));
            assert!(nums.last().unwrap().as_u64().unwrap() >= 1);
        }
    }
}

fn regex_like_coefficient(s: &str) -> bool {
    let s = s.strip_prefix('-').unwrap_or(s);
    let mut parts = s.split('/');
    let ok = |p: Option<&str>| p.is_some_and(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
    let first = parts.next();
    match (parts.next(), parts.next()) {
        (None, None) => ok(first),
        (second, None) => ok(first) && ok(second),
        _ => false,
    }
}

#[test]
fn json_output_round_trips_and_matches_schema() {
    let schema_path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "schemas", "polynomial.json"]
        .iter()
        .collect();
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let x = stdout(&["phi", "456^2", "--p", "3", "--m", "3", "--n", "1", "--format", "json"]);
    let xj: Value = serde_json::from_str(&x).unwrap();
    validate_polynomial_json(&xj, &schema);
    let f = Polynomial::<XVar>::from_json(&xj).unwrap();
    assert_eq!(f.to_json(), xj);
    let c = stdout(&[
        "straighten",
        "--p",
        "3",
        "--m",
        "3",
        "--n",
        "1",
        "156^1",
        "234^2",
        "--format",
        "json",
    ]);
    let cj: Value = serde_json::from_str(&c).unwrap();
    validate_polynomial_json(&cj, &schema);
    assert_eq!(Polynomial::<PluckerVar>::from_json(&cj).unwrap().len(), 30);
    let p = stdout(&["pi", "235^2", "--p", "3", "--m", "4", "--n", "2", "--format", "json"]);
    validate_polynomial_json(&serde_json::from_str(&p).unwrap(), &schema);
}

#[test]
fn output_is_deterministic() {
    let args = ["groebner", "--p", "3", "--m", "3", "--q", "1"];
    assert_eq!(qgrass(&args).stdout, qgrass(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(qgrass(&[]).status.code(), Some(1));
    assert_eq!(qgrass(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(qgrass(&["--help"]).status.code(), Some(0));
    assert_eq!(qgrass(&["degree", "--p", "2"]).status.code(), Some(1));
    assert_eq!(
        qgrass(&["phi", "12^5", "--p", "2", "--m", "2", "--n", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(qgrass(&["phi", "2x^0", "--p", "2", "--m", "2"]).status.code(), Some(1));
    assert_eq!(
        qgrass(&["degree", "--p", "2", "--m", "2", "--n", "1", "--q", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        qgrass(&["straighten", "146^1", "235^2", "--p", "3", "--m", "3", "--n", "1"])
            .status
            .code(),
        Some(1)
    );
    let out = qgrass(&["syzygy", "w", "146^1", "235^2", "--p", "3", "--m", "3", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

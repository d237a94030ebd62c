use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

use scov::groebner::groebner_basis;
use scov::harness::default_horizon;
use scov::paths::closed_form_f;
use scov::qsym::qinv_generators;

fn scov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scov")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn dim_prints_the_basis_count() {
    let out = scov(&["dim", "--n", "3", "--m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "40\n");
    assert_eq!(stdout(&scov(&["dim", "--n", "4", "--m", "1"])), "14\n");
}

#[test]
fn act_matches_golden_example() {
    let args = ["act", "--element", "sigma=[3,1,2] colors=[1,0,1] m=3", "--poly", "x1^2*x2", "--action", "quasi"];
    let out = scov(&args);
    assert!(out.status.success());
    assert_eq!(stdout(&out), golden("example_action.txt"));
    let mut classical = args;
    classical[6] = "classical";
    assert_ne!(stdout(&scov(&classical)), golden("example_action.txt"));
}

#[test]
fn hilbert_methods() {
    assert_eq!(stdout(&scov(&["hilbert", "--n", "2", "--m", "2", "--method", "linear"])), "1,2,2,2,1\n");
    for method in ["basis", "groebner", "orthogonal", "formula"] {
        assert_eq!(stdout(&scov(&["hilbert", "--n", "2", "--m", "2", "--method", method])), "1,2,2,2,1\n", "{method}");
    }
    let json: serde_json::Value =
        serde_json::from_slice(&scov(&["hilbert", "--n", "3", "--m", "1", "--json"]).stdout).unwrap();
    assert_eq!(json["series"], serde_json::json!([1, 2, 2]));
    assert_eq!(json["total"], 5);
}

#[test]
fn closed_form_matches_golden_series() {
    for line in golden("f_series.txt").lines() {
        let (n, series) = line.split_once(": ").unwrap();
        assert_eq!(closed_form_f(n.parse().unwrap()).to_string(), series, "n={n}");
    }
}

#[test]
fn leading_monomials_match_golden() {
    let expected: BTreeMap<String, Vec<Vec<u32>>> = serde_json::from_str(&golden("leading_monomials.json")).unwrap();
    assert_eq!(expected.len(), 8);
    for (key, lms) in expected {
        let (n, m) = key.split_once(',').unwrap();
        let (n, m): (usize, u32) = (n.parse().unwrap(), m.parse().unwrap());
        let horizon = default_horizon(n, m);
        let g = groebner_basis(n, &qinv_generators(n, m, horizon), horizon).unwrap();
        let mut got: Vec<Vec<u32>> = g.leading_monomials().iter().map(|e| e.entries().to_vec()).collect();
        got.sort();
        assert_eq!(got, lms, "n={n} m={m}");
    }
}

#[test]
fn gb_and_basis_output() {
    assert_eq!(stdout(&scov(&["gb", "--n", "2", "--m", "1"])), "x1 + x2\nx2^2\n");
    assert_eq!(stdout(&scov(&["basis", "--n", "2", "--m", "1"])), "1\nx2\n");
    let json: serde_json::Value = serde_json::from_slice(&scov(&["basis", "--n", "2", "--m", "2", "--json"]).stdout).unwrap();
    assert_eq!(json["total"], 8);
    let json: serde_json::Value = serde_json::from_slice(&scov(&["gb", "--n", "2", "--m", "1", "--json"]).stdout).unwrap();
    assert_eq!(json["generators"][0][0]["coefficient"], "1");
    assert_eq!(json["leading_monomials"], serde_json::json!(["x1", "x2^2"]));
}

#[test]
fn paths_and_chevalley() {
    let out = stdout(&scov(&["paths", "--n", "3", "--dyck-only"]));
    assert_eq!(out.lines().filter(|l| l.starts_with("dyck")).count(), 5);
    assert!(!out.contains("transdiagonal"));
    let json: serde_json::Value = serde_json::from_slice(&scov(&["paths", "--n", "2", "--json"]).stdout).unwrap();
    assert_eq!(json["dyck"], serde_json::json!([[0, 0], [0, 1]]));
    assert_eq!(json["transdiagonal"], serde_json::json!([[0, 2], [1, 0]]));
    let out = scov(&["chevalley", "--n", "2", "--m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8\n");
}

#[test]
fn verify_reports_and_is_deterministic() {
    let run = || {
        let out = scov(&["verify", "--n", "3", "--m", "2", "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timings_ms");
        serde_json::to_string(&v).unwrap()
    };
    let first = run();
    assert_eq!(first, run());
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["n"], 3);
    assert_eq!(v["m"], 2);
    for route in v["routes"].as_array().unwrap() {
        assert_eq!(route["total"], 40, "{}", route["route"]);
    }
    let text = stdout(&scov(&["verify", "--n", "2", "--m", "2", "--routes", "basis,linear"]));
    assert!(text.contains("route basis"));
    assert!(!text.contains("route groebner"));
    assert!(text.ends_with("status PASS\n"));
}

#[test]
fn exit_codes() {
    let out = scov(&["dim", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(scov(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(scov(&["dim", "--n", "3", "--m", "0"]).status.code(), Some(2));
    assert_eq!(scov(&["act", "--element", "sigma=[1,1] colors=[0,0] m=2", "--poly", "x1"]).status.code(), Some(2));
    assert_eq!(scov(&["dim", "--n", "6", "--m", "3", "--cap", "1000"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_scov"))
        .args(["dim", "--n", "6", "--m", "3"])
        .env("SCOV_ELEMENT_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = scov(&["verify", "--n", "3", "--m", "1", "--cap", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["routes"][0]["status"], "SKIPPED");
}

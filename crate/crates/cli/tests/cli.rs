use std::process::{Command, Output};

use shiftdelta::expr::record;
use shiftdelta::schrodinger::Classification;
use shiftdelta::Scalar;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftdelta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn product_examples() {
    assert_eq!(stdout(&["product", "delta(0) * heaviside(0)"]).trim(), "delta(0)");
    assert_eq!(stdout(&["product", "heaviside(0) * delta(0)"]).trim(), "0");
    let v = json(&["product", "D(heaviside(0)) + piece(-1,1: x)"]);
    assert_eq!(v["status"], "ok");
    let d = record::decode_dist(v["payload"].as_str().unwrap()).unwrap();
    assert_eq!(d.to_string(), v["text"].as_str().unwrap());
}

#[test]
fn parse_errors_exit_2() {
    let out = run(&["product", "delta(0) +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 10"));
    assert_eq!(run(&["classify", "--c1", "0.5"]).status.code(), Some(2));
    let v = json(&["product", "heaviside("]);
    assert_eq!(v["status"], "parse_error");
}

#[test]
fn precondition_violations_exit_3() {
    assert_eq!(run(&["product", "delta(2i)"]).status.code(), Some(3));
    assert_eq!(run(&["product", "--n-cap", "0", "delta'(0)"]).status.code(), Some(3));
    assert_eq!(run(&["represent", "--interacting", "1,0,1"]).status.code(), Some(3));
    assert_eq!(run(&["represent", "--separating", "0,0,1,1"]).status.code(), Some(3));
    assert_eq!(run(&["scatter", "--bc", "1,0,0,0;2,0,0,0"]).status.code(), Some(3));
    assert_eq!(run(&["spectrum", "--c1", "1", "--grid"]).status.code(), Some(3));
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "--c1", "1", "--c2", "1", "--b1", "0", "--b2", "0"]);
    let payload = v["payload"].as_str().unwrap();
    let class_text = &payload[..payload.find("\n\n").unwrap() + 1];
    let class = record::decode_classification(class_text).unwrap();
    let s = Scalar::from_int;
    assert_eq!(class, Classification::InteractingSA { a: s(0), b: s(0), c: s(1) });
    let bc = record::decode_bc(&payload[payload.find("\n\n").unwrap() + 2..]).unwrap();
    assert_eq!(bc.rank(), 2);

    let text = stdout(&["classify", "--c1", "0", "--c2", "0", "--b1", "1/3", "--b2", "1/3"]);
    assert!(text.contains("theta = 2"), "{text}");
    let text = stdout(&["classify", "--b1", "1", "--b2", "0"]);
    assert!(text.contains("RestrictionOfSStar"));
    assert!(text.contains("psi+'(0) = 0"));
    let text = stdout(&["classify", "--c1", "-1/2", "--c2", "3+2i", "--b1", "1", "--b2", "1"]);
    assert!(text.contains("RestrictionOfSStar"));
}

#[test]
fn represent_examples() {
    let text = stdout(&["represent", "--bc", "0,0,1,0;0,0,0,1"]);
    assert!(text.contains("not representable as potential"), "{text}");
    assert!(text.contains("not realizable without"));
    let text = stdout(&["represent", "--bc", "1,0,0,0;0,1,0,0"]);
    assert!(text.contains("two pseudo potential forms"));
    let v = json(&["represent", "--bc", "1,0,0,0;0,1,0,0"]);
    let payload = v["payload"].as_str().unwrap();
    assert_eq!(payload.matches("record operator").count(), 3);
    let text = stdout(&["represent", "--interacting", "0,0,3"]);
    assert!(text.contains("c1 + c2 = 2*(3)*(1 - b1)"), "{text}");
    assert!(text.contains("Potential(c1=3, c2=3, b1=0, b2=0)"));
    let text = stdout(&["represent", "--separating", "0,1,1,0"]);
    assert!(text.contains("b1 = b2 = 1, c2 = 0, c1 free"), "{text}");
    let v = json(&["represent", "--interacting", "2,1/2,1"]);
    let spec = record::decode_operator(v["payload"].as_str().unwrap()).unwrap();
    assert!(!spec.is_potential());
}

#[test]
fn numerics_tables() {
    let table = stdout(&["scatter", "--delta", "-2", "--k", "1"]);
    let row: Vec<f64> = table.lines().nth(1).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!((row[10] - 0.5).abs() < 1e-12);
    let table = stdout(&["spectrum", "--delta", "-2"]);
    let e: f64 = table.lines().nth(1).unwrap().split(',').nth(2).unwrap().parse().unwrap();
    assert!((e + 1.0).abs() < 1e-10);
    let table = stdout(&["spectrum", "--delta", "2"]);
    assert_eq!(table.lines().count(), 1);
    let table = stdout(&["weaklimit", "--expr", "heaviside(0)", "--test", "1+x", "--side", "right"]);
    assert!(table.contains("# errors decreasing: true"), "{table}");
    assert_eq!(table.lines().filter(|l| !l.starts_with('#')).count(), 4);
}

#[test]
fn deterministic_output() {
    let args = ["--format", "json", "represent", "--bc", "1,2,3,4;0,1,-1,2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

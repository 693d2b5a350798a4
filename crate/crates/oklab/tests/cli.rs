use std::path::Path;
use std::process::{Command, Output};

use oklab::format::{parse_value, Input};
use serde_json::Value;

fn oklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oklab"))
        .args(args)
        .env_remove("OKLAB_MEMORY_LIMIT_MB")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = oklab(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')).map(str::trim))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

#[test]
fn volume_of_min_example_uses_the_fiber() {
    let o = oklab(&["volume-fn", "--example", "min", "--x", "2,3"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert_eq!(line(&t, "method"), "fiber");
    assert_eq!(line(&t, "value"), "2/1");
    let j = json(&["volume-fn", "--example", "min", "--x", "1,1", "--x", "1,0"]);
    assert_eq!(j["values"][0]["value"], "1/1");
    assert_eq!(j["values"][1]["value"], "0/1");
}

#[test]
fn nonpolynomial_example_verifies() {
    let o = oklab(&["verify-example", "nonpoly", "--n", "3,4", "--nmax", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert_eq!(line(&t, "estimate"), "4.00");
    assert_eq!(line(&t, "target"), "4");
    assert_eq!(line(&t, "verdict"), "PASS");
    let j = json(&["verify-example", "nonpoly", "--n", "1,1"]);
    let est = j["estimate_float"].as_f64().unwrap();
    assert!((est - (4.0 - 2.0 * 2f64.sqrt())).abs() <= 0.02);
}

#[test]
fn every_example_verifies() {
    for name in ["min", "concave-pl", "segre", "golden"] {
        let j = json(&["verify-example", name]);
        assert_eq!(j["verdict"], "PASS", "{name}");
    }
}

#[test]
fn mixed_volume_of_square_and_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let square = write(dir.path(), "square.json", r#"{"schema_version":1,"vertices":[[0,0],[1,0],[0,1],[1,1]]}"#);
    let triangle = write(dir.path(), "triangle.json", r#"{"schema_version":1,"vertices":[[0,0],[1,0],[0,1]]}"#);
    let bodies = format!("{square},{triangle}");
    let o = oklab(&["mixed-volume", "--bodies", &bodies, "--type", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert_eq!(line(&t, "geometric"), "2/1");
    assert!((line(&t, "ideal").parse::<f64>().unwrap() - 2.0).abs() <= 0.1);
    assert_eq!(line(&t, "verdict"), "AGREE");
    let j = json(&["mixed-volume", "--bodies", &bodies, "--type", "2,0"]);
    assert_eq!(j["geometric"], "2/1");
    assert_eq!(j["positivity_agrees"], true);
}

#[test]
fn ladder_csv_columns() {
    let o = oklab(&["mixed-mult", "--example", "golden", "--type", "1", "--pschedule", "1,2,55", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "p,value_num,value_den,float\n1,1,1,1.000000\n2,3,2,1.500000\n55,89,55,1.618182\n"
    );
}

#[test]
fn segre_multiplicities_and_positivity() {
    let j = json(&["mixed-mult", "--example", "segre", "--type", "1,1", "--pschedule", "1,2,4,8"]);
    assert_eq!(j["value"], "1/1");
    assert_eq!(j["provenance"], "exact");
    assert!(j["ladder"].as_array().unwrap().iter().all(|e| e["value"] == "1/1"));
    let j = json(&["positivity", "--example", "segre", "--type", "2,0"]);
    assert_eq!(j["positive"], false);
    assert_eq!(j["violated"], "{1}");
    let j = json(&["hilbert", "--example", "segre", "--n", "2,3", "--polynomial"]);
    assert_eq!(j["dim"], 12);
    assert_eq!(j["polynomial"], "n1*n2 + n1 + n2 + 1");
}

#[test]
fn emitted_documents_reparse() {
    for name in ["nonpoly", "min", "concave-pl", "segre", "golden"] {
        let j = json(&["hilbert", "--example", name, "--n", if name == "golden" { "1" } else { "1,1" }]);
        let parsed = parse_value(&j["input"]).unwrap();
        assert_eq!(parsed, Input::Algebra(oklab_core::presets::by_name(name).unwrap().unwrap()), "{name}");
    }
    let j = json(&["fiber", "--example", "concave-pl", "--x", "1/2,3"]);
    let Input::Polytope(p) = parse_value(&j["fiber"]).unwrap() else { panic!("fiber is a polytope") };
    assert_eq!(p.ambient_dim(), 1);
    assert_eq!(j["volume"], "4/1");
    let j = json(&["no-body", "--example", "golden"]);
    assert!(matches!(parse_value(&j["body"]).unwrap(), Input::Polytope(_)));
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "f.json", r#"{"family":{"from_body":{"vertices":[[0,0],[1,0]]}}}"#);
    let j = json(&["ideal-family", "--families", &fam, "--type", "1,1"]);
    let back = parse_value(&j["j"][0]).unwrap();
    assert_eq!(back, oklab::commands::load(&fam).unwrap());
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let out = out.to_str().unwrap();
    let args = ["mixed-mult", "--example", "segre", "--type", "1,1", "--format", "json", "--output", out];
    assert!(oklab(&args).status.success());
    let first = std::fs::read(out).unwrap();
    assert!(oklab(&args).status.success());
    assert_eq!(first, std::fs::read(out).unwrap());
}

#[test]
fn bhattacharya_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", r#"{"family":{"m_adic":2}}"#);
    let x = write(dir.path(), "x.json", r#"{"ideal":{"vars":2,"gens":[[1,0]]}}"#);
    assert_eq!(json(&["ideal-family", "--families", &m, "--type", "1,0"])["float"], 1.0);
    assert_eq!(json(&["ideal-family", "--families", &m, "--type", "0,1"])["float"], 1.0);
    assert_eq!(json(&["ideal-family", "--input", &m, "--families", &x, "--type", "1,0"])["float"], 1.0);
    let j = json(&["ideal-family", "--families", &x, "--type", "0,1"]);
    assert_eq!(j["float"], 0.0);
    assert_eq!(j["criterion_violated"], "{1}");
}

#[test]
fn inline_inputs() {
    let doc = r#"{"schema_version":1,"r":1,"s":1,"generators":[[0,1],[1,1],[2,1]]}"#;
    let j = json(&["hilbert", "--input", doc, "--n", "3"]);
    assert_eq!(j["dim"], 7);
    let stair = r#"{"s":1,"staircase":{"lower":{"linear":{"coeffs":[0]}},"upper":{"linear":{"coeffs":[3],"den":2}}}}"#;
    let j = json(&["hilbert", "--input", stair, "--n", "1", "--nmax", "4"]);
    let dims: Vec<u64> = j["values"].as_array().unwrap().iter().map(|v| v["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 4, 5, 7]);
}

#[test]
fn exit_codes() {
    assert_eq!(oklab(&["volume-fn", "--example", "nope", "--x", "1,1"]).status.code(), Some(2));
    assert_eq!(oklab(&["volume-fn", "--example", "min", "--x", "1"]).status.code(), Some(2));
    assert_eq!(oklab(&["volume-fn", "--input", "/nonexistent.json", "--x", "1"]).status.code(), Some(2));
    assert_eq!(oklab(&["volume-fn", "--input", "{\"schema_version\":9}", "--x", "1"]).status.code(), Some(2));
    assert_eq!(oklab(&["frobnicate"]).status.code(), Some(2));
    let err = oklab(&["verify-example", "nope"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("nonpoly, min, concave-pl, segre, golden"));
    let starved = Command::new(env!("CARGO_BIN_EXE_oklab"))
        .args(["hilbert", "--example", "segre", "--n", "40,40"])
        .env("OKLAB_MEMORY_LIMIT_MB", "0")
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(3), "{}", String::from_utf8_lossy(&starved.stderr));
    let bad_env = Command::new(env!("CARGO_BIN_EXE_oklab"))
        .args(["hilbert", "--example", "segre", "--n", "1,1"])
        .env("OKLAB_MEMORY_LIMIT_MB", "lots")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn failed_verification_exits_with_four() {
    let o = oklab(&["verify-example", "nonpoly", "--n", "1,1", "--nmax", "2"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(line(&stdout(&o), "verdict"), "FAIL");
}

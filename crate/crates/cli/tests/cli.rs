use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

struct Run {
    code: i32,
    report: Option<Value>,
    stderr: String,
}

fn fpbeh(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_fpbeh")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        report: serde_json::from_str(&stdout).ok(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn verify(dir: &TempDir, report: &Value) -> Run {
    let p = write(dir, "report.json", &report.to_string());
    fpbeh(&["check", "--verify", s(&p)])
}

#[test]
fn eliminate_example() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ/4; free x; bound y; x + 2*y = 0");
    let r = fpbeh(&["eliminate", "--formula", s(&f), "--oracle"]);
    assert_eq!(r.code, 0);
    let rep = r.report.unwrap();
    assert_eq!(rep["result"]["matrix"], json!([["2"]]));
    assert_eq!(rep["oracle_checked"], json!(true));
    assert_eq!(verify(&d, &rep).code, 0);
}

#[test]
fn include_examples() {
    let d = TempDir::new().unwrap();
    let a1 = write(&d, "a1.json", r#"{"ring": "ZZ/4", "free": 1, "B": [["1"]]}"#);
    let a2 = write(&d, "a2.json", r#"{"ring": "ZZ/4", "free": 1, "B": [["2"]]}"#);
    let r = fpbeh(&["include", "--formula", s(&a1), "--formula", s(&a2)]);
    assert_eq!(r.code, 0);
    let rep = r.report.unwrap();
    assert_eq!(rep["certificates"]["matrices"]["X"], json!([["2"]]));
    assert_eq!(verify(&d, &rep).code, 0);
    let r = fpbeh(&["include", "--formula", s(&a2), "--formula", s(&a1), "--oracle"]);
    assert_eq!(r.code, 1);
    let rep = r.report.unwrap();
    assert_eq!(rep["result"]["included"], json!(false));
    assert_eq!(rep["certificates"], json!("none (evaluation-based)"));
}

#[test]
fn include_with_latents_is_scoped() {
    let d = TempDir::new().unwrap();
    let a = write(&d, "a.txt", "ring ZZ/4; free x; bound y; x + 2*y = 0");
    let b = write(&d, "b.txt", "ring ZZ/4; free x; 2*x = 0");
    let rep = fpbeh(&["include", "--formula", s(&a), "--formula", s(&b)]).report.unwrap();
    assert_eq!(rep["result"]["included"], json!(true));
    assert_eq!(rep["result"]["scope"], json!("valid for fp-injective signal spaces"));
}

#[test]
fn controllable_example() {
    let d = TempDir::new().unwrap();
    let n = write(&d, "n.json", r#"{"ring": "ZZ", "presentation": [["0", "2"]]}"#);
    let r = fpbeh(&["controllable", "--module", s(&n)]);
    assert_eq!(r.code, 1);
    let rep = r.report.unwrap();
    assert_eq!(rep["result"]["controllable"], json!(false));
    assert_eq!(rep["result"]["ext1_invariants"], json!(["2"]));
    assert_eq!(verify(&d, &rep).code, 0);
    let free = write(&d, "free.json", r#"{"ring": "ZZ", "presentation": {"rows": 0, "cols": 2}}"#);
    assert_eq!(fpbeh(&["controllable", "--module", s(&free)]).code, 0);
}

#[test]
fn every_report_replays() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ/6; free x, z; bound y; x + 2*y = 0; 3*z + y = 0");
    for cmd in ["eval", "eliminate", "defect", "covdefect", "malgrange", "agj-dual", "observable", "controllable"] {
        let r = fpbeh(&[cmd, "--formula", s(&f), "--oracle"]);
        assert!(r.code <= 1, "{cmd}: {}", r.stderr);
        let rep = r.report.unwrap();
        assert_eq!(rep["command"], json!(cmd));
        let v = verify(&d, &rep);
        assert_eq!(v.code, 0, "{cmd} does not replay: {}", v.report.unwrap());
    }
    let r = fpbeh(&["eliminate", "--formula", s(&f), "--reduce"]);
    assert_eq!(verify(&d, &r.report.unwrap()).code, 0);
}

#[test]
fn tampered_certificates_are_caught() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ/4; free x; bound y; x + 2*y = 0");
    let mut rep = fpbeh(&["eliminate", "--formula", s(&f)]).report.unwrap();
    rep["certificates"]["matrices"]["Y"] = json!([["1"]]);
    let v = verify(&d, &rep);
    assert_eq!(v.code, 1);
    assert_eq!(v.report.unwrap()["result"]["verified"], json!(false));
    let mut rep = fpbeh(&["eliminate", "--formula", s(&f)]).report.unwrap();
    rep["result"]["matrix"] = json!([["1"]]);
    assert_eq!(verify(&d, &rep).code, 1);
}

#[test]
fn reports_round_trip() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ/4; free x; bound y; x + 2*y = 0");
    let rep = fpbeh(&["defect", "--formula", s(&f)]).report.unwrap();
    let keys: Vec<&str> = rep.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["command", "inputs", "result", "certificates", "oracle_checked"] {
        assert!(keys.contains(&k));
    }
    let text = serde_json::to_string(&rep).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), rep);
}

#[test]
fn exit_codes() {
    let d = TempDir::new().unwrap();
    let bad = write(&d, "bad.txt", "ring ZZ; free x; x + = 0");
    let r = fpbeh(&["eval", "--formula", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 1"));
    assert_eq!(fpbeh(&["eval", "--formula", s(&d.path().join("missing.txt"))]).code, 2);
    let big = write(&d, "big.txt", "ring ZZ/12; free a, b, c, d; a + b + c + d = 0");
    assert_eq!(fpbeh(&["eval", "--formula", s(&big), "--budget", "100"]).code, 3);
    let z = write(&d, "z.txt", "ring ZZ; free x; 2*x = 0");
    assert_eq!(fpbeh(&["eval", "--formula", s(&z)]).code, 2);
    assert_eq!(fpbeh(&["eliminate"]).code, 2);
    assert_eq!(fpbeh(&["nonsense"]).code, 2);
}

#[test]
fn eval_in_a_signal_space() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ; free x; 2*x = 0");
    let sig = write(
        &d,
        "sig.json",
        r#"{"ring": "ZZ", "backend": "finite", "module": {"ring": "ZZ", "presentation": [["4"]]}, "exponent": 4}"#,
    );
    let rep = fpbeh(&["eval", "--formula", s(&f), "--signal", s(&sig), "--jobs", "2"]).report.unwrap();
    assert_eq!(rep["result"]["count"], json!(2));
    let rep = fpbeh(&["transport", "--formula", s(&f), "--signal", s(&sig)]).report.unwrap();
    assert_eq!(rep["result"]["order"], json!(2));
}

#[test]
fn change_of_rings() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ; free x; bound y; x + 2*y = 0");
    let rep = fpbeh(&["transport", "--formula", s(&f), "--ring", "ZZ/6", "--oracle"]).report.unwrap();
    assert_eq!(rep["result"]["formula"]["ring"], json!("ZZ/6"));
    assert_eq!(rep["result"]["oracle_agrees"], json!(true));
    assert_eq!(fpbeh(&["transport", "--formula", s(&f), "--ring", "QQ"]).code, 2);
}

#[test]
fn behavior_verdicts() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ; free x; bound y; x + 2*y = 0");
    let rep = fpbeh(&["observable", "--formula", s(&f)]).report.unwrap();
    assert_eq!(rep["result"]["finitely_observable"], json!("holds"));
    let tensor = write(
        &d,
        "t.json",
        r#"{"ring": "ZZ", "A": {"rows": 0, "cols": 1}, "Aprime": {"rows": 0, "cols": 1}, "V": [["2"]]}"#,
    );
    let r = fpbeh(&["agj-dual", "--functor", s(&tensor)]);
    assert_eq!(r.code, 0);
    assert_eq!(verify(&d, &r.report.unwrap()).code, 0);
}

#[test]
fn invariant_sweeps() {
    let r = fpbeh(&["check", "--ring", "ZZ/6"]);
    assert_eq!(r.code, 0);
    let rep = r.report.unwrap();
    assert_eq!(rep["result"]["passed"], json!(true));
    assert_eq!(rep["result"]["suites"].as_array().unwrap().len(), 5);
}

#[test]
fn human_output() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "phi.txt", "ring ZZ/4; free x; 2*x = 0");
    let out = Command::new(env!("CARGO_BIN_EXE_fpbeh"))
        .args(["eval", "--formula", s(&f), "--human"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: eval"));
    assert!(text.contains("count: 2"));
}

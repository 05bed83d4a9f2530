use std::io::Write;
use std::process::{Command, Output, Stdio};

use mrdcodes::json::{code_from_json, code_to_json, CodeJson};
use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mrdcodes"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn code(args: &[&str]) -> String {
    ok(args, None)
}

#[test]
fn field_output() {
    let f = json(&ok(&["field", "--p", "3", "--e", "1", "--m", "2"], None));
    assert_eq!(f["top_poly"], json("[1,0,1]"));
    let f = json(&ok(&["field", "--p", "3", "--e", "1", "--m", "3"], None));
    assert_eq!(f["top_poly"], json("[1,2,0,1]"));
    let f = json(&ok(&["field", "--p", "2", "--e", "2", "--m", "2"], None));
    assert_eq!(f["base_poly"], json("[1,1,1]"));
    assert_eq!(f["top_poly"].as_array().unwrap().len(), 3);
}

#[test]
fn field_errors() {
    let out = run(&["field", "--p", "4", "--m", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));
    let out = run(&["field", "--p", "3", "--m", "2", "--top-poly", "[2,0,1]"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["field", "--p", "3"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explicit_polynomial_with_or_without_leading_one() {
    let a = ok(&["field", "--p", "3", "--m", "3", "--top-poly", "[1,2,0]"], None);
    let b = ok(&["field", "--p", "3", "--m", "3", "--top-poly", "[1,2,0,1]"], None);
    assert_eq!(a, b);
}

#[test]
fn self_dual_pipeline() {
    let c = code(&["construct", "self-dual-mrd", "--q", "3", "--n", "2"]);
    let r = json(&ok(&["check", "--mrd", "--self-dual"], Some(&c)));
    assert_eq!(r["selfDual"], true);
    assert_eq!(r["mrd"], true);
    assert_eq!(r["rankDistance"], 2);
    assert_eq!(r["singletonRHS"], 2);

    let d = ok(&["expand", "--basis", "orthonormal"], Some(&c));
    let r = json(&ok(&["check", "--delsarte", "--self-dual"], Some(&d)));
    assert_eq!(r["selfDual"], true);

    let d = ok(&["expand", "--basis", "power"], Some(&c));
    let out = run(&["check", "--delsarte", "--self-dual"], Some(&d));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&String::from_utf8(out.stdout).unwrap())["selfDual"], false);
}

#[test]
fn nonexistence_and_input_errors() {
    for (args, code) in [
        (vec!["construct", "self-dual-mrd", "--q", "5", "--n", "2"], 3),
        (vec!["construct", "self-dual-mrd", "--q", "3", "--n", "4"], 3),
        (vec!["construct", "self-dual-mrd", "--q", "2", "--n", "2"], 3),
        (vec!["construct", "self-dual-mrd", "--q", "3", "--n", "3"], 2),
        (vec!["construct", "lagrangian-mrd", "--q", "3", "--n", "2"], 3),
        (vec!["construct", "lagrangian-mrd", "--q", "2", "--n", "4"], 2),
        (vec!["construct", "self-dual-mrd", "--q", "6", "--n", "2"], 2),
    ] {
        let out = run(&args, None);
        assert_eq!(out.status.code(), Some(code), "{args:?}");
    }
    let out = run(&["construct", "self-dual-mrd", "--q", "5", "--n", "2"], None);
    assert!(String::from_utf8_lossy(&out.stderr).contains("1 mod 4"));
    let out = run(&["check"], Some("{not json"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lagrangian_code_and_its_dual() {
    let c = code(&["construct", "lagrangian-mrd", "--q", "2", "--n", "2"]);
    let r = json(&ok(&["check", "--form", "hyperbolic", "--self-dual", "--mrd"], Some(&c)));
    assert_eq!(r["lagrangian"], true);
    assert_eq!(r["selfDual"], true);
    let r = json(&ok(&["check"], Some(&c)));
    assert_eq!(r["selfDual"], false);

    let dual = ok(&["dual", "--form", "hyperbolic"], Some(&c));
    let a = code_from_json(&serde_json::from_str::<CodeJson>(&c).unwrap()).unwrap();
    let b = code_from_json(&serde_json::from_str::<CodeJson>(&dual).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn custom_form_file() {
    let dir = tempfile::tempdir().unwrap();
    let form = dir.path().join("form.json");
    std::fs::write(&form, r#"{"tag":"custom","B":[[0,1],[1,0]]}"#).unwrap();
    let c = code(&["construct", "lagrangian-mrd", "--q", "2", "--n", "2"]);
    let r = json(&ok(&["check", "--form", form.to_str().unwrap()], Some(&c)));
    assert_eq!(r["selfDual"], true);
    std::fs::write(&form, r#"{"tag":"custom","B":[[1,1],[1,1]]}"#).unwrap();
    let out = run(&["check", "--form", form.to_str().unwrap()], Some(&c));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gabidulin_construction() {
    let c = code(&["construct", "gabidulin", "--q", "3", "--m", "3", "--k", "2"]);
    let r = json(&ok(&["check", "--mrd"], Some(&c)));
    assert_eq!(r["rankDistance"], 2);

    let dir = tempfile::tempdir().unwrap();
    let v = dir.path().join("v.json");
    let field = json(&ok(&["field", "--p", "2", "--m", "3"], None));
    let vector = serde_json::json!({"field": field, "vector": [[1, 0, 0], [0, 1, 0]]});
    std::fs::write(&v, vector.to_string()).unwrap();
    let c = code(&["construct", "gabidulin", "--vector", v.to_str().unwrap(), "--k", "1"]);
    let r = json(&ok(&["check", "--mrd"], Some(&c)));
    assert_eq!(r["rankDistance"], 2);
    let vector = serde_json::json!({"field": field, "vector": [[1, 0, 0], [1, 0, 0]]});
    std::fs::write(&v, vector.to_string()).unwrap();
    let out = run(&["construct", "gabidulin", "--vector", v.to_str().unwrap(), "--k", "1"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bases() {
    let b = ok(&["basis", "orthonormal", "--q", "3", "--m", "2"], None);
    let parsed = json(&b);
    assert!(parsed["lambda"].is_array());
    let d = json(&ok(&["basis", "dual"], Some(&b)));
    assert_eq!(d["alpha"], parsed["alpha"]);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    std::fs::write(&path, &b).unwrap();
    let c = code(&["construct", "self-dual-mrd", "--q", "3", "--n", "2"]);
    let d = ok(&["expand", "--basis", path.to_str().unwrap()], Some(&c));
    let r = json(&ok(&["check", "--delsarte", "--self-dual"], Some(&d)));
    assert_eq!(r["selfDual"], true);
}

#[test]
fn emitted_json_round_trips() {
    for args in [
        vec!["construct", "self-dual-mrd", "--q", "3", "--n", "6"],
        vec!["construct", "lagrangian-mrd", "--q", "4", "--n", "2"],
        vec!["construct", "gabidulin", "--q", "4", "--m", "3", "--k", "2"],
    ] {
        let text = code(&args);
        let c = code_from_json(&serde_json::from_str::<CodeJson>(&text).unwrap()).unwrap();
        let again = serde_json::to_string_pretty(&code_to_json(&c)).unwrap() + "\n";
        assert_eq!(again, text);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["verify-paper", "--suite", "transfer", "--q-max", "4", "--n-max", "3"];
    assert_eq!(run(&args, None).stdout, run(&args, None).stdout);
    let args = ["construct", "self-dual-mrd", "--q", "7", "--n", "2"];
    assert_eq!(run(&args, None).stdout, run(&args, None).stdout);
}

#[test]
fn verify_suites() {
    let out = run(&["verify-paper", "--suite", "finite-thm"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&String::from_utf8(out.stdout).unwrap())["passed"], true);
    let out = run(&["verify-paper", "--suite", "char2"], None);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify-paper", "--suite", "nosuch"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn exit_code_follows_the_report() {
    let out = run(&["verify-paper", "--suite", "fixture"], None);
    let passed = json(&String::from_utf8(out.stdout).unwrap())["passed"].as_bool().unwrap();
    assert_eq!(out.status.code(), Some(if passed { 0 } else { 1 }));
}

#[test]
fn report_file_and_timing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let stdout = ok(
        &["verify-paper", "--suite", "lagrangian-thm", "--q-max", "5", "--n-max", "4", "--report", path.to_str().unwrap()],
        None,
    );
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    assert!(json(&stdout).get("wallTimeMs").is_none());
    let timed = json(&ok(&["verify-paper", "--suite", "lagrangian-thm", "--q-max", "3", "--timing"], None));
    assert!(timed["wallTimeMs"].is_u64());
}

#[test]
fn budget_is_enforced() {
    let c = code(&["construct", "self-dual-mrd", "--q", "3", "--n", "6", "--budget", "0"]);
    let out = run(&["check", "--mrd", "--budget", "1000"], Some(&c));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let r = json(&ok(&["check", "--budget", "1000"], Some(&c)));
    assert!(r["rankDistance"].is_null());
    assert_eq!(r["selfDual"], true);
}

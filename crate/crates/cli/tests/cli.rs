use std::process::{Command, Output};

use serde_json::Value;

fn qfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfock")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = qfock(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("valid JSON"))
}

#[test]
fn check_algebra_passes() {
    let o = qfock(&["check-algebra", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
    let (code, v) = json(&["check-algebra", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["q_statistics_instances"].as_u64().unwrap() > 0);
}

#[test]
fn injected_fault_fails() {
    let o = qfock(&["check-algebra", "--n", "2", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first violation: triple"));
    let (code, v) = json(&["check-algebra", "--n", "1", "--inject-fault"]);
    assert_eq!(code, 1);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn report_examples() {
    let (code, v) = json(&["report", "--n", "1", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim_vp"], 6);
    assert_eq!(v["decomposition"], serde_json::json!([[3, 0], [2, 1]]));
    let graded: Vec<&Value> = v["weights"].as_array().unwrap().iter().filter(|w| !w["positive_definite"].is_null()).collect();
    assert_eq!(graded.len(), 4);
    assert!(graded.iter().all(|w| w["positive_definite"] == true));
    assert_eq!(json(&["report", "--n", "2", "--p", "2"]).1["dim_vp"], 9);
    let (_, v) = json(&["report", "--n", "2", "--p", "1"]);
    assert_eq!(v["dim_vp"], 3);
    assert_eq!(v["decomposition"], serde_json::json!([[1, 0, 0]]));
    assert_eq!(v["character"]["agree"], true);
}

#[test]
fn report_single_weight() {
    let (code, v) = json(&["report", "--n", "2", "--p", "2", "--weight", "0,1,1"]);
    assert_eq!(code, 0);
    let rows = v["weights"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["dim_bar"], 4);
    assert_eq!(rows[0]["dim_vp"], 2);
    assert_eq!(rows[0]["mp_dim"], 2);
}

#[test]
fn lemma3_examples() {
    let o = qfock(&["lemma3", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("det equals (s^2 - sum t)^2: yes"));
    let (code, v) = json(&["lemma3", "--r", "2", "--s", "2", "--t", "1,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["point"]["rank"], 2);
    let o = qfock(&["lemma3", "--r", "4", "--samples", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identity confirmed at all samples"));
    let (_, v) = json(&["lemma3", "--r", "3", "--s", "2", "--t", "1/2,3/2,2"]);
    assert_eq!(v["point"]["rank"], 4);
}

#[test]
fn q2_examples() {
    let (code, v) = json(&["q2", "--p", "4"]);
    assert_eq!(code, 0);
    for key in ["orthonormality", "action_formulas", "matrix_tables", "adjointness"] {
        assert!(v["residuals"][key].as_f64().unwrap() < 1e-10, "{key}");
    }
    let (_, v) = json(&["q2", "--p", "1"]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["decomposition"], serde_json::json!([[1, 0]]));
    let (code, v) = json(&["q2", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["tables"].as_array().unwrap().len(), 4);
}

#[test]
fn deterministic_output() {
    let a = qfock(&["lemma3", "--r", "4", "--samples", "5", "--seed", "3", "--format", "json"]);
    let b = qfock(&["lemma3", "--r", "4", "--samples", "5", "--seed", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors() {
    for args in [
        &["check-algebra", "--n", "7"][..],
        &["check-algebra", "--n", "0"],
        &["report", "--n", "2", "--p", "2", "--level-cap", "1"],
        &["report", "--n", "2", "--p", "2", "--weight", "1,1"],
        &["report", "--n", "2", "--p", "2", "--weight", "x"],
        &["lemma3", "--r", "5"],
        &["lemma3", "--r", "2", "--s", "2", "--t", "1"],
        &["lemma3", "--r", "2", "--s", "2"],
        &["q2", "--p", "0"],
        &["q2"],
        &["frobnicate"],
        &["q2", "--p", "2", "--format", "yaml"],
    ] {
        assert_eq!(qfock(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bounds_can_be_raised() {
    assert_eq!(qfock(&["check-algebra", "--n", "5"]).status.code(), Some(2));
    assert_eq!(qfock(&["q2", "--p", "7", "--max-p", "7"]).status.code(), Some(0));
}

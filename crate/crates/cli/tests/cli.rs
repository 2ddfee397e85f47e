use std::process::{Command, Output};

fn cdalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdalg")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cdalg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eval_worked_product() {
    assert_eq!(stdout(&["eval", "--n", "4", "(e1+e10)*e15"]), "e5 - e14\n");
    assert_eq!(stdout(&["eval", "--n", "4", "assoc(e4+e15, e4+e15, e1)"]), "2*e10\n");
}

#[test]
fn table_csv_and_json() {
    let csv = stdout(&["--format", "csv", "table", "--n", "4"]);
    assert_eq!(csv.lines().count(), 17);
    assert_eq!(csv.lines().nth(2).unwrap().split(',').nth(6), Some("-e4"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["table", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(json["table"][1][2], "e3");
}

#[test]
fn classify_e8() {
    let text = stdout(&["classify", "--n", "4", "e8"]);
    assert!(text.contains("alternative: true"));
    assert!(text.contains("strongly_alternative: true"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "classify", "--n", "4", "e1"])).unwrap();
    assert_eq!(json["strongly_alternative"], false);
}

#[test]
fn subalgebra_and_norm_violation() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "subalgebra", "--n", "4", "e1", "e2", "--span", "quaternion"]))
            .unwrap();
    assert_eq!(json["closed"], true);
    assert_eq!(stdout(&["norm-violation", "--n", "3"]), "none\n");
    assert!(stdout(&["norm-violation", "--n", "4"]).starts_with("x = e1 + e10\n"));
}

#[test]
fn verify_json_lines() {
    let out = stdout(&["--format", "json", "verify", "--n", "4", "--theorem", "yui_2_3", "--trials", "10", "--seed", "3"]);
    let report: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(report["theorem_id"], "yui_2_3");
    assert_eq!(report["passed"], true);
    assert_eq!(report["seed"], 3);
}

#[test]
fn errors_exit_nonzero() {
    let bad = cdalg(&["eval", "--n", "4", "e1 +"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error"));
    assert_eq!(cdalg(&["verify", "--n", "3", "--theorem", "theorem_4_2"]).status.code(), Some(2));
    assert!(!cdalg(&["table"]).status.success());
}

#[test]
fn matrix_csv() {
    let csv = stdout(&["matrix", "--n", "2", "e1"]);
    assert_eq!(csv.lines().count(), 4);
}

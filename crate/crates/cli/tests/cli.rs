use std::process::{Command, Output};

use qgue::qgue::VerificationReport;

fn qgue(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgue"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn moment_examples() {
    let p2 = qgue(&["moment", "--power-sum", "2", "--n-vars", "2", "--method", "fast"]);
    assert!(p2.status.success());
    assert_eq!(stdout(&p2), "2+q+q^2");

    let s11 = qgue(&["moment", "--schur", "1,1", "--n-vars", "2", "--method", "oracle"]);
    assert_eq!(stdout(&s11), "-1");

    let p4 = qgue(&["moment", "--power-sum", "4", "--n-vars", "2", "--at-q", "1"]);
    assert_eq!(stdout(&p4), "18");
}

#[test]
fn fast_and_oracle_agree() {
    for kappa in ["2", "1,1", "2,2", "3,1", "2,1,1"] {
        let fast = qgue(&["moment", "--schur", kappa, "--n-vars", "3", "--method", "fast"]);
        let oracle = qgue(&["moment", "--schur", kappa, "--n-vars", "3", "--method", "oracle"]);
        assert!(fast.status.success() && oracle.status.success());
        assert_eq!(stdout(&fast), stdout(&oracle), "κ = {kappa}");
    }
}

#[test]
fn closed_method_warns_on_stderr() {
    let out = qgue(&["moment", "--hermite-sq", "1,1", "--method", "closed"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let fast = qgue(&["moment", "--hermite-sq", "1,1"]);
    assert_eq!(stdout(&out), stdout(&fast));
}

#[test]
fn moment_json_has_fixed_keys() {
    let args = ["moment", "--power-sum", "2", "--n-vars", "2", "--at-q", "1/2", "--format", "json"];
    let first = qgue(&args);
    assert_eq!(first.stdout, qgue(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["value"], "2+q+q^2");
    assert_eq!(v["specialized"], "11/4");
    assert_eq!(v["n_vars"], 2);
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(qgue(&["moment", "--schur", "1,2"]).status.code(), Some(2));
    assert_eq!(qgue(&["moment", "--hermite-sq", "1"]).status.code(), Some(2));
    assert_eq!(qgue(&["moment", "--power-sum", "2", "--at-q", "x"]).status.code(), Some(2));
    assert_eq!(qgue(&["moment"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = qgue(&["verify", "--suite", "theorem3", "--max-weight", "4", "--max-vars", "3"]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = qgue(&["verify", "--suite", "theorem4", "--max-weight", "4", "--max-vars", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("theorem4 N=1 ell=1 m=1: ratio -1  (sign -1, q^0)"), "{text}");

    let duality = qgue(&["verify", "--suite", "duality", "--max-n", "30"]);
    assert_eq!(duality.status.code(), Some(0));
}

#[test]
fn verify_guardrails_exit_2() {
    let too_big = qgue(&["verify", "--suite", "theorem4", "--max-weight", "8", "--max-vars", "6"]);
    assert_eq!(too_big.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&too_big.stderr).starts_with("error:"));
    assert_eq!(qgue(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path_str = path.to_str().unwrap();
    let args = ["verify", "--suite", "theorem4", "--max-weight", "4", "--max-vars", "2", "--report", path_str];
    qgue(&args);
    let first = std::fs::read_to_string(&path).unwrap();
    qgue(&args);
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());

    let typed: Vec<VerificationReport> = serde_json::from_str(&first).unwrap();
    assert_eq!(first.trim_end(), serde_json::to_string_pretty(&typed).unwrap());
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    let report = &v[0];
    assert_eq!(report["identity"], "theorem4");
    let discrepant = report["points"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["status"] == "discrepant")
        .count();
    assert_eq!(report["summary"]["discrepant"], discrepant);
}

#[test]
fn genus_table_rows_and_limit() {
    let out = qgue(&["table", "--harer-zagier", "--max-m", "3", "--format", "json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows[1]["counts"], serde_json::json!([2, 1]));
    assert_eq!(rows[1]["oracle"], serde_json::json!([2, 1]));
    assert_eq!(rows[2]["counts"], serde_json::json!([5, 10]));
    assert_eq!(rows[2]["matches"], true);

    assert_eq!(qgue(&["table", "--harer-zagier", "--max-m", "7"]).status.code(), Some(2));
}

//! Black-box tests of the binary: formats, exit codes, and round-trips.

use std::process::{Command, Output};

use quasicount::qc_report;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasicount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasicount"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&run(&["--help"])), 0);
    assert_eq!(exit_code(&run(&["--version"])), 0);
    assert_eq!(exit_code(&run(&["qc", "--help"])), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(exit_code(&run(&[])), 1);
    assert_eq!(exit_code(&run(&["qc"])), 1);
    assert_eq!(exit_code(&run(&["qc", "abc"])), 1);
    assert_eq!(exit_code(&run(&["nonsense", "5"])), 1);
    assert_eq!(exit_code(&run(&["qc", "0"])), 1);
    assert_eq!(exit_code(&run(&["qc", "1000000001"])), 1);
    assert_eq!(exit_code(&run(&["range", "10", "5"])), 1);
    assert_eq!(exit_code(&run(&["range", "0", "5"])), 1);
    assert_eq!(exit_code(&run(&["range", "1", "2000000"])), 1);
    assert_eq!(exit_code(&run(&["lloyd", "4"])), 1);
    assert_eq!(exit_code(&run(&["lloyd", "5", "--order", "2"])), 1);
    assert_eq!(exit_code(&run(&["tvalue", "6", "2", "3", "6"])), 1);
    assert_eq!(
        exit_code(&run(&[
            "verify",
            "--n-max",
            "5000",
            "--suites",
            "recursions"
        ])),
        1
    );
}

#[test]
fn oracle_bound_respects_environment() {
    let denied = run_env(
        &["qc", "60", "--method", "oracle"],
        "QUASICOUNT_ORACLE_MAX",
        "50",
    );
    assert_eq!(exit_code(&denied), 1);
    let allowed = run_env(
        &["qc", "40", "--method", "oracle"],
        "QUASICOUNT_ORACLE_MAX",
        "50",
    );
    assert_eq!(exit_code(&allowed), 0);
    // the oracle verify suite clamps its default sweep to the bound
    let clamped = run_env(
        &["verify", "--suites", "oracle"],
        "QUASICOUNT_ORACLE_MAX",
        "50",
    );
    assert_eq!(exit_code(&clamped), 0);
    assert!(stdout(&clamped).contains("n_max=50"));
}

#[test]
fn qc_all_agrees_for_example() {
    let output = run(&["qc", "8", "--method", "all"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("(2, 8, 8)"));
    assert!(text.contains("(4, 8, 8)"));
    assert!(text.contains("qc_sum = 3"));
    assert!(text.contains("qc_closed = 3"));
    assert!(text.contains("oracle = 3"));
    assert!(text.contains("r_cn = 12"));
    assert!(text.contains("methods agree"));
}

#[test]
fn qc_one_is_empty() {
    let output = run(&["qc", "1"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("qc_sum = 0"));
}

#[test]
fn json_round_trips_the_report() {
    let output = run(&["qc", "8", "--method", "all", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value: Value = serde_json::from_str(&stdout(&output)).unwrap();
    let report = qc_report(8, true).unwrap();
    assert_eq!(value["n"], report.n.to_string());
    assert_eq!(value["qc_sum"], report.qc_sum.to_string());
    assert_eq!(value["qc_closed"], report.qc_closed.unwrap().to_string());
    assert_eq!(value["oracle"], report.oracle_value.unwrap().to_string());
    assert_eq!(value["r_cn"], report.r_cyclic.to_string());
    let signatures = value["signatures"].as_array().unwrap();
    assert_eq!(signatures.len(), report.rows.len());
    for (entry, row) in signatures.iter().zip(&report.rows) {
        let periods: Vec<String> = row
            .signature
            .periods()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let from_json: Vec<String> = entry["periods"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        assert_eq!(from_json, periods);
        assert_eq!(entry["genus"], row.genus.to_string());
        assert_eq!(entry["t_value"], row.breakdown.value.to_string());
        assert_eq!(entry["case"], row.breakdown.case_tag.as_str());
    }
    // method selection omits absent fields
    let sum_only = run(&["qc", "8", "--format", "json"]);
    let value: Value = serde_json::from_str(&stdout(&sum_only)).unwrap();
    assert!(value.get("qc_closed").is_none());
    assert!(value.get("oracle").is_none());
}

#[test]
fn csv_round_trips_the_report() {
    let output = run(&["qc", "8", "--method", "all", "--format", "csv"]);
    let text = stdout(&output);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert_eq!(
        header,
        "n,n1,n2,n3,genus,case,t_value,tau1,tau2,w_primes,qc_sum,qc_closed,r_cn,oracle"
    );
    let report = qc_report(8, true).unwrap();
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), report.rows.len());
    let mut t_total = 0u64;
    for (fields, row) in rows.iter().zip(&report.rows) {
        let [a, b, c] = row.signature.periods();
        assert_eq!(fields[1], a.to_string());
        assert_eq!(fields[2], b.to_string());
        assert_eq!(fields[3], c.to_string());
        assert_eq!(fields[4], row.genus.to_string());
        t_total += fields[6].parse::<u64>().unwrap();
        assert_eq!(fields[10], report.qc_sum.to_string());
        assert_eq!(fields[12], report.r_cyclic.to_string());
    }
    assert_eq!(t_total, report.qc_sum);
    // no trailing separator, LF endings
    assert!(!text.contains(",\n"));
    assert!(!text.contains('\r'));
}

#[test]
fn range_golden_row() {
    let output = run(&["range", "5", "5", "--format", "csv"]);
    assert_eq!(
        stdout(&output),
        "n,qc,r_cn,num_signatures,min_genus,max_genus\n5,1,6,1,2,2\n"
    );
    let empty = run(&["range", "1", "1", "--format", "csv"]);
    assert_eq!(
        stdout(&empty),
        "n,qc,r_cn,num_signatures,min_genus,max_genus\n1,0,1,0,,\n"
    );
}

#[test]
fn range_output_is_deterministic() {
    let first = stdout(&run(&["range", "1", "30", "--format", "csv"]));
    let second = stdout(&run(&["range", "1", "30", "--format", "csv"]));
    assert_eq!(first, second);
}

#[test]
fn signatures_listing() {
    let output = run(&["signatures", "8"]);
    let text = stdout(&output);
    let first = text.find("(2, 8, 8)").unwrap();
    let second = text.find("(4, 8, 8)").unwrap();
    assert!(first < second);
}

#[test]
fn tvalue_breakdown_fields() {
    let output = run(&["tvalue", "7", "7", "7", "7"]);
    let text = stdout(&output);
    assert!(text.contains("case = all-equal"));
    assert!(text.contains("tau2 = 2"));
    assert!(text.contains("w_primes = [7]"));
    assert!(text.contains("product = 5/6"));
    assert!(text.contains("T = 2"));
    // periods may come in any order
    let reordered = run(&["tvalue", "8", "8", "2", "8"]);
    assert!(stdout(&reordered).contains("T = 1"));
}

#[test]
fn dessins_count() {
    assert!(stdout(&run(&["dessins", "7"])).contains("r(C_7) = 8"));
    assert_eq!(
        stdout(&run(&["dessins", "7", "--format", "csv"])),
        "n,r_cn\n7,8\n"
    );
}

#[test]
fn lloyd_coefficients() {
    let output = run(&["lloyd", "7", "--order", "3", "--format", "csv"]);
    let text = stdout(&output);
    assert_eq!(text.lines().last().unwrap(), "3,2");
}

#[test]
fn quiet_strips_headers() {
    let loud = stdout(&run(&["range", "5", "6"]));
    let quiet = stdout(&run(&["range", "5", "6", "--quiet"]));
    assert!(loud.contains("num_signatures"));
    assert!(!quiet.contains("num_signatures"));
    assert!(quiet.contains('5'));
}

#[test]
fn closed_pipe_exits_quietly() {
    use std::io::Read;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_quasicount"))
        .args(["range", "1", "5000"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // read a few bytes, then hang up on the child mid-stream
    let mut taken = child.stdout.take().unwrap();
    let mut buffer = [0u8; 64];
    let _ = taken.read(&mut buffer).unwrap();
    drop(taken);
    let status = child.wait().unwrap();
    assert!(status.success(), "status: {status:?}");
    let mut err = String::new();
    child
        .stderr
        .take()
        .unwrap()
        .read_to_string(&mut err)
        .unwrap();
    assert!(!err.contains("panicked"), "stderr: {err}");
}

#[test]
fn verify_small_bounds_pass() {
    let output = run(&["verify", "--n-max", "60", "--suites", "oracle,corollary"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("suite=oracle"));
    assert!(text.contains("suite=corollary"));
    assert!(text.contains("verify: pass"));

    let csv = run(&[
        "verify", "--n-max", "60", "--suites", "oracle", "--format", "csv",
    ]);
    let text = stdout(&csv);
    assert_eq!(
        text.lines().next().unwrap(),
        "suite,n_max,checks,failures,status"
    );
    assert!(text.lines().nth(1).unwrap().starts_with("oracle,60,"));

    let json = run(&[
        "verify", "--n-max", "40", "--suites", "lloyd", "--format", "json",
    ]);
    let value: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["status"], "pass");
}

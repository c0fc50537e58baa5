//! End-to-end checks of the `kummer` binary: table shapes, published
//! constants, exit codes, determinism, and the JSON rendering.

use std::process::{Command, Output};

fn kummer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enclose_single_row_at_zero() {
    let out = kummer(&[
        "enclose", "--alpha", "2", "--delta", "1.5", "--n", "2", "--m", "4", "--grid", "0:0:1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "x,g,G,t,T,j,J,oracle,xi,eta");
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[1], "0.09375"); // 3/32
    assert_eq!(row[2], "0.125"); // 1/8
    assert_eq!(row[8], "0.14285714285714285"); // 1/7
    assert!(lines.next().is_none());
}

#[test]
fn enclose_full_grid_row_count() {
    let out = kummer(&[
        "enclose", "--alpha", "2", "--delta", "1.5", "--n", "2", "--m", "4", "--grid", "0:7:0.01",
    ]);
    assert!(out.status.success());
    // header + 701 data rows, each containing the oracle inside [j, J]
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 701);
    for row in rows.iter().step_by(97) {
        let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
        let (j, big_j, oracle) = (fields[5], fields[6], fields[7]);
        assert!(j <= oracle + 1e-12 && oracle <= big_j + 1e-12, "{row}");
    }
}

#[test]
fn invalid_delta_is_usage_error() {
    let out = kummer(&[
        "enclose", "--alpha", "2", "--delta=-1", "--n", "2", "--m", "4", "--grid", "0:0:1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_grid_is_usage_error() {
    let out = kummer(&[
        "enclose", "--alpha", "2", "--delta", "1.5", "--n", "2", "--m", "4", "--grid", "0..7",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "enclose", "--alpha", "0.5", "--delta", "-0.5", "--n", "3", "--m", "4", "--grid",
        "0:3:0.1",
    ];
    let first = kummer(&args);
    let second = kummer(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn gamma_integer_order_has_zero_width() {
    let out = kummer(&["gamma", "--nu", "3", "--m", "4", "--grid", "0:2:0.5"]);
    assert!(out.status.success());
    for row in stdout(&out).lines().skip(1) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[5], fields[6], "matched lo != hi in {row}");
        // the Pade columns are empty outside nu in (0, 1)
        assert_eq!(fields[3], "");
        assert_eq!(fields[4], "");
    }
}

#[test]
fn gamma_matched_contains_oracle() {
    let out = kummer(&["gamma", "--nu", "2.5", "--m", "5", "--q", "2", "--grid", "0:8:0.25"]);
    assert!(out.status.success());
    for row in stdout(&out).lines().skip(1) {
        let fields: Vec<&str> = row.split(',').collect();
        let lo: f64 = fields[5].parse().unwrap();
        let hi: f64 = fields[6].parse().unwrap();
        let oracle: f64 = fields[7].parse().unwrap();
        assert!(lo <= oracle + 1e-12 && oracle <= hi + 1e-12, "{row}");
    }
}

#[test]
fn error_ratio_bounds_and_exact_case() {
    let out = kummer(&[
        "error-ratio", "--alpha", "2", "--delta", "1.5", "--x", "1", "--x", "6", "--n-max", "13",
    ]);
    assert!(out.status.success());
    for row in stdout(&out).lines().skip(1) {
        let ratio: f64 = row.split(',').nth(4).unwrap().parse().unwrap();
        assert!(ratio > 0.0 && ratio <= 1.0, "{row}");
    }

    let exact = kummer(&[
        "error-ratio", "--alpha", "2", "--delta", "2", "--x", "1", "--n-max", "3",
    ]);
    assert!(exact.status.success());
    let text = stdout(&exact);
    let last = text.lines().last().unwrap();
    assert_eq!(last, "3,1,0,0,", "exact case should report an empty ratio");
}

#[test]
fn examples_all_pass() {
    for which in ["i", "ii", "iii", "gamma-half", "footnote"] {
        let out = kummer(&["examples", which]);
        assert!(out.status.success(), "examples {which} failed to run");
        let text = stdout(&out);
        let rows: Vec<&str> = text.lines().skip(1).collect();
        assert!(!rows.is_empty());
        for row in rows {
            assert!(row.ends_with(",PASS"), "examples {which}: {row}");
        }
    }
}

#[test]
fn unknown_example_is_usage_error() {
    let out = kummer(&["examples", "iv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn norm_bound_dominates_empirical() {
    let out = kummer(&[
        "norm", "--alpha", "2", "--delta", "1.5", "--sigma", "1", "--n-max", "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    for row in rows {
        let ratio: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
        assert!(ratio > 0.0 && ratio <= 1.0, "{row}");
    }
}

#[test]
fn json_format_validates() {
    let out = kummer(&[
        "enclose", "--alpha", "2", "--delta", "1.5", "--n", "2", "--m", "4", "--grid", "0:1:0.5",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let columns = doc["columns"].as_array().unwrap();
    assert_eq!(columns.len(), 10);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].as_array().unwrap().len(), columns.len());
    assert_eq!(rows[0][1], serde_json::json!(0.09375));
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join("kummer-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let args = [
        "enclose", "--alpha", "2", "--delta", "1.5", "--n", "2", "--m", "4", "--grid", "0:1:0.5",
    ];
    let direct = kummer(&args);
    let mut with_output: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    with_output.push("--output".into());
    with_output.push(path.to_str().unwrap().into());
    let refs: Vec<&str> = with_output.iter().map(|s| s.as_str()).collect();
    let filed = kummer(&refs);
    assert!(filed.status.success());
    assert!(filed.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_file(&path).unwrap();
}

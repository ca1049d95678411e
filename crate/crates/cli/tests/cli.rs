use std::process::{Command, Output};

use hpm_core::blasius::{blasius_series, TABULATED_ALPHA};
use serde_json::Value;

fn hpm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hpm")).args(args).output().expect("spawn hpm")
}

fn stdout(args: &[&str]) -> String {
    let out = hpm(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn data_rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

fn summary(csv: &str, key: &str) -> f64 {
    let line = csv.lines().find(|l| l.starts_with("# summary:")).expect("summary line");
    let needle = format!("{key}=");
    let start = line.find(&needle).unwrap() + needle.len();
    line[start..].split_whitespace().next().unwrap().parse().unwrap()
}

fn coefficient_lines(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip_while(|l| !l.starts_with("# coefficients"))
        .skip(1)
        .take_while(|l| l.starts_with("# ") && !l.starts_with("# summary"))
        .map(|l| l[2..].split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn blasius_table_example() {
    let csv = stdout(&["blasius", "--order", "3", "--alpha", "paper", "--eta-max", "2", "--eta-step", "0.5", "--format", "csv"]);
    let header = csv.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "eta,f_hpm,fp_hpm,fpp_hpm,f_ref,abs_err");
    assert_eq!(data_rows(&csv).len(), 5);

    let coeffs = coefficient_lines(&csv);
    let printed: Vec<f64> = coeffs.iter().map(|c| c[2].parse().unwrap()).collect();
    let degrees: Vec<&str> = coeffs.iter().map(|c| c[1].as_str()).collect();
    assert_eq!(degrees, ["2", "5", "8", "11"]);
    assert!((printed[0] - 0.1660285).abs() < 5e-9);
    assert!((printed[1] - -0.00045942).abs() < 5e-9);
    assert!((printed[2] - 0.00000249).abs() < 1e-8);
    assert!((printed[3] - -1.43e-8).abs() < 5e-11);

    let meta = csv.lines().nth(1).unwrap();
    assert!(meta.contains("problem=blasius") && meta.contains("order=3") && meta.contains("alpha=3.32057000e-1"));
}

#[test]
fn blasius_order_zero_has_one_coefficient() {
    let csv = stdout(&["blasius", "--order", "0"]);
    assert_eq!(coefficient_lines(&csv).len(), 1);
}

#[test]
fn blasius_shoot_records_alpha() {
    let csv = stdout(&["blasius", "--alpha", "shoot", "--order", "2"]);
    let meta = csv.lines().nth(1).unwrap();
    let alpha: f64 = meta
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix("alpha="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((alpha - 0.332057).abs() < 5e-6);
    assert!(meta.contains("alpha_mode=shoot"));
}

#[test]
fn blasius_warns_beyond_trusted_range() {
    let out = hpm(&["blasius", "--eta-max", "6"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn burgers_examples() {
    let csv = stdout(&["burgers", "--order", "3", "--t-max", "1"]);
    assert!(summary(&csv, "max_err") <= 1.0 / 24.0 + 1e-12);
    let header = csv.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "x,t,u_hpm,u_exact,abs_err");
    assert_eq!(data_rows(&csv).len(), 65 * 21);

    let csv = stdout(&["burgers", "--order", "3", "--t-max", "0", "--t-steps", "1"]);
    assert!(summary(&csv, "max_err") <= 1e-15);

    let csv = stdout(&["burgers", "--order", "8", "--t-max", "1"]);
    assert!(summary(&csv, "max_err") <= 3e-6);
    assert!(summary(&csv, "residual_max") > 0.0);
}

#[test]
fn convergence_examples() {
    let csv = stdout(&["convergence", "--problem", "burgers", "--order", "6", "--t-max", "1"]);
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 7);
    assert!(rows.windows(2).all(|w| w[1][1] < w[0][1]), "{rows:?}");

    let csv = stdout(&[
        "convergence", "--problem", "blasius", "--order", "6", "--eta-max", "1.5", "--eta-step", "0.25", "--alpha", "shoot",
    ]);
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 7);
    assert!(rows.windows(2).all(|w| w[1][1] <= w[0][1]), "{rows:?}");

    let csv = stdout(&["convergence", "--problem", "burgers", "--order", "0"]);
    assert_eq!(data_rows(&csv).len(), 1);
}

#[test]
fn json_round_trips_full_precision() {
    let text = stdout(&["blasius", "--order", "6", "--eta-max", "1", "--eta-step", "0.25", "--format", "json"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let series = blasius_series(TABULATED_ALPHA, 6).unwrap();
    for (c, want) in doc["coefficients"].as_array().unwrap().iter().zip(series.coefficients()) {
        assert_eq!(c["coefficient"].as_f64().unwrap().to_bits(), want.coefficient.to_bits());
        assert_eq!(c["degree"].as_u64().unwrap() as usize, want.degree);
    }
    for row in doc["rows"].as_array().unwrap() {
        let eta = row["eta"].as_f64().unwrap();
        let p = series.eval(eta).unwrap();
        assert_eq!(row["f_hpm"].as_f64().unwrap().to_bits(), p.f.to_bits());
        assert_eq!(row["fpp_hpm"].as_f64().unwrap().to_bits(), p.fpp.to_bits());
    }
    assert_eq!(doc["meta"]["problem"], "blasius");
    assert_eq!(doc["meta"]["alpha"].as_f64(), Some(TABULATED_ALPHA));
    assert!(doc["summary"]["max_err"].is_number());

    let text = stdout(&["burgers", "--order", "2", "--x-steps", "3", "--t-steps", "2", "--format", "json"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 6);
    assert!(doc.get("coefficients").is_none());
    assert!(doc["meta"]["alpha"].is_null());
}

#[test]
fn output_and_config_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("table.csv");
    let cfg_path = dir.path().join("run.cfg");
    std::fs::write(&cfg_path, "order = 1\nformat = csv\nx-steps = 4\nt-steps = 3\n").unwrap();

    let out = hpm(&["burgers", "--config", cfg_path.to_str().unwrap(), "--order", "2", "--output", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&out_path).unwrap();
    assert!(csv.lines().nth(1).unwrap().contains("order=2"));
    assert_eq!(data_rows(&csv).len(), 12);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| hpm(args).status.code().unwrap();
    assert_eq!(code(&["blasius", "--order", "13"]), 2);
    assert_eq!(code(&["blasius", "--eta-step", "0"]), 2);
    assert_eq!(code(&["burgers", "--t-max", "0"]), 2);
    assert_eq!(code(&["burgers", "--format", "xml"]), 2);
    assert_eq!(code(&["nonsense"]), 2);
    assert_eq!(code(&["convergence"]), 2);
    assert_eq!(code(&["burgers", "--problem", "blasius"]), 2);
    assert_eq!(code(&["burgers", "--config", "/nonexistent/run.cfg"]), 2);
    assert_eq!(code(&["burgers", "--order", "1", "--output", "/nonexistent/dir/out.csv"]), 2);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["burgers", "--order", "1", "--x-steps", "2", "--t-steps", "2"]), 0);
}

#[test]
fn golden_command_matches_committed_file() {
    let fresh = stdout(&["golden"]);
    let committed = include_str!("../../core/tests/data/oracle_golden.txt");
    let parse = |t: &str| hpm_core::golden::parse_golden(t).unwrap();
    let (a, b) = (parse(&fresh), parse(committed));
    assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>());
    for (k, v) in &a {
        assert!((v - b[k]).abs() <= 1e-12 * v.abs(), "{k}");
    }
}

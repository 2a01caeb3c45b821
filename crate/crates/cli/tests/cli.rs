use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn tcycles(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcycles"))
        .args(args)
        .env_remove("TCYCLES_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = tcycles(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn count_carousel_triangles() {
    let v = json(&["count", "--carousel", "5", "--length", "3"]);
    assert_eq!(v["count"], 5);
    assert_eq!(v["normalized_density"].as_f64(), Some(2.0));
    assert_eq!(v["expected_random"].as_f64(), Some(2.5));
}

#[test]
fn count_transitive_is_acyclic() {
    assert_eq!(json(&["count", "--transitive", "6", "--length", "4"])["count"], 0);
}

#[test]
fn count_is_reproducible_from_the_seed() {
    let args = ["count", "--random", "10", "--seed", "7", "--length", "3"];
    assert_eq!(tcycles(&args).stdout, tcycles(&args).stdout);
    let parallel = json(&["count", "--random", "10", "--seed", "7", "--length", "3", "--workers", "3"]);
    assert_eq!(parallel, json(&args));
}

#[test]
fn count_reads_tournament_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    fs::write(&path, "3\n010\n001\n100\n").unwrap();
    let v = json(&["count", "--input", path.to_str().unwrap(), "--length", "3"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["normalized_density"].as_f64(), Some(4.0));
}

#[test]
fn usage_and_input_errors_exit_with_one() {
    assert_eq!(tcycles(&["count", "--carousel", "5", "--length", "2"]).status.code(), Some(1));
    assert_eq!(tcycles(&["count", "--input", "/no/such/file", "--length", "3"]).status.code(), Some(1));
    assert_eq!(tcycles(&["count", "--carousel", "4", "--length", "3"]).status.code(), Some(1));
    assert_eq!(tcycles(&["count", "--carousel", "5", "--transitive", "5", "--length", "3"]).status.code(), Some(1));
    assert_eq!(tcycles(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(tcycles(&["verify-lemma", "--order", "6"]).status.code(), Some(1));
    assert_eq!(tcycles(&["profile4", "--transitive", "5", "--workers", "0"]).status.code(), Some(1));
    let out = tcycles(&["count", "--carousel", "5", "--length", "3", "--output", "/no/such/dir/r.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(tcycles(&["--help"]).status.success());
}

#[test]
fn malformed_tournament_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3\n011\n001\n100\n").unwrap();
    let out = tcycles(&["profile4", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn profile_of_carousel_seven() {
    let v = json(&["profile4", "--carousel", "7"]);
    assert_eq!(v["total"], 35);
    assert_eq!(v["t4"].as_u64().unwrap() + v["c4"].as_u64().unwrap(), 35);
}

#[test]
fn spectrum_of_the_cyclic_triangle() {
    let v = json(&["spectrum", "--carousel", "3"]);
    let ev = v["eigenvalues"].as_array().unwrap();
    assert_eq!(ev[0]["re"].as_f64(), Some(0.5));
    let im = ev[1]["im"].as_f64().unwrap().abs();
    assert!((im - 3f64.sqrt() / 6.0).abs() < 1e-12);
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn spectrum_checks_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("a.txt");
    fs::write(&good, "2\n0.25 0.25\n0.25 0.25\n").unwrap();
    let v = json(&["spectrum", "--matrix", good.to_str().unwrap()]);
    assert_eq!(v["rho"].as_f64(), Some(0.5));
    let bad = dir.path().join("b.txt");
    fs::write(&bad, "2\n0.25 0.4\n0.25 0.25\n").unwrap();
    assert_eq!(tcycles(&["spectrum", "--matrix", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn verify_order_four() {
    let v = json(&["verify-lemma", "--order", "4"]);
    assert_eq!(v["max_cyclic_index"], 8);
    assert_eq!(v["claims_confirmed"], true);
    assert_eq!(v["achiever_classes"].as_array().unwrap().len(), 1);
    let all = json(&["verify-lemma", "--order", "4", "--scope", "all"]);
    assert_eq!(all["matrices_scanned"], 64);
    assert_eq!(all["max_cyclic_index"], 8);
}

#[test]
fn verify_order_eight_is_worker_independent() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for workers in ["1", "4"] {
        let ck = dir.path().join(format!("ck{workers}.json"));
        let out = tcycles(&["verify-lemma", "--order", "8", "--workers", workers, "--checkpoint", ck.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["max_cyclic_index"], 2176);
        v["elapsed_seconds"] = Value::Null;
        reports.push(v);
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn conjecture_table_is_csv_by_default() {
    let out = tcycles(&["conjecture-table", "--max-length", "12"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "length,value,lower_bound,excess,lower_bound_excess");
    assert!(lines[1].starts_with("4,1.33333333333333,"));
    assert!(lines[2].starts_with("8,1.05396825396825,"));
    assert_eq!(lines.len(), 4);
}

#[test]
fn reproduce_exit_codes() {
    let v = json(&["reproduce", "-k", "64"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[3]["construction"], "quasirandom");
    assert_eq!(rows[3]["density"].as_f64(), Some(1.0));
    assert!(rows.iter().all(|r| r["within_tolerance"] == true));
    let strict = tcycles(&["reproduce", "-k", "16", "--tolerance", "1e-9"]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("mismatch"));
}

#[test]
fn carousel_grid_round_trips_through_sample() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("w.txt");
    let out = tcycles(&["carousel", "-k", "4", "--grid", "--format", "text", "--output", grid.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&grid).unwrap().starts_with("4\n0.5 1 0.5 0\n"));

    let t = dir.path().join("t.txt");
    let args = ["sample", "-n", "9", "--seed", "5", "--w", grid.to_str().unwrap(), "--output", t.to_str().unwrap()];
    assert!(tcycles(&args).status.success());
    let first = fs::read_to_string(&t).unwrap();
    assert!(tcycles(&args).status.success());
    assert_eq!(first, fs::read_to_string(&t).unwrap());
    assert!(json(&["count", "--input", t.to_str().unwrap(), "--length", "3"])["count"].is_u64());
}

#[test]
fn carousel_densities() {
    let v = json(&["carousel", "-k", "32", "--max-length", "5"]);
    let d = v["densities"].as_array().unwrap();
    assert_eq!(d.len(), 3);
    assert!((d[0]["density"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((d[1]["density"].as_f64().unwrap() - 4.0 / 3.0).abs() < 0.01);
    assert_eq!(tcycles(&["carousel", "-k", "5"]).status.code(), Some(1));
}

#[test]
fn workers_default_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_tcycles"))
        .args(["count", "--random", "8", "--length", "4"])
        .env("TCYCLES_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

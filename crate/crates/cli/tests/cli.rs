use std::path::Path;
use std::process::{Command, Output};

use fracpow_cli::manifest::{csv_body, Manifest};

fn fracpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracpow")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fracpow(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn replay(text: &str) -> String {
    let manifest = Manifest::from_csv(text).expect("manifest line");
    let argv = manifest.argv();
    stdout(&argv.iter().map(String::as_str).collect::<Vec<_>>())
}

fn parse_rows(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(csv_body(text).as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn single_cell() {
    let text = stdout(&["scalar-error", "--M", "50", "--kappa", "2", "--alpha", "0.9", "--rule", "simpson"]);
    let rows = parse_rows(&text);
    assert_eq!(rows.len(), 1);
    let v: f64 = rows[0][3].parse().unwrap();
    assert!((v / 5.280150e-06 - 1.0).abs() < 0.02, "{v:e}");
    assert!(csv_body(&text).starts_with("M,kappa,alpha,max_error,argmax_x\n"));
}

#[test]
fn rows_sorted_regardless_of_flag_order() {
    let text = stdout(&[
        "scalar-error", "--M", "100,50", "--kappa", "3", "--kappa", "2", "--alpha", "0.9,0.1", "--xmax", "1e6",
    ]);
    let keys: Vec<(usize, f64, f64)> = parse_rows(&text)
        .iter()
        .map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap(), r[2].parse().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(keys.len(), 8);
    assert_eq!(keys, sorted);
}

#[test]
fn deterministic_and_replayable() {
    for args in [
        &["scalar-error", "--M", "50", "--xmax", "1e8", "--rule", "simpson"][..],
        &["scalar-curve", "--alpha", "0.25", "--repr", "eq23", "--xmax", "1e4"][..],
        &["table", "2", "--xmax", "1e5", "--samples-per-decade", "10"][..],
    ] {
        let first = stdout(args);
        let second = stdout(args);
        assert_eq!(csv_body(&first), csv_body(&second), "{args:?}");
        assert_eq!(csv_body(&replay(&first)), csv_body(&first), "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["scalar-error", "--M", "100", "--xmax", "1e10"];
    let one = stdout(&[&["--threads", "1"][..], &args[..]].concat());
    let four = stdout(&[&["--threads", "4"][..], &args[..]].concat());
    assert_eq!(csv_body(&one), csv_body(&four));
}

#[test]
fn curve_consistent_with_error_scan() {
    let curve = stdout(&["scalar-curve", "--alpha", "0.5", "--M", "100", "--kappa", "2", "--xmax", "1e10"]);
    let cell = stdout(&["scalar-error", "--alpha", "0.5", "--M", "100", "--kappa", "2", "--xmax", "1e10"]);
    let points = parse_rows(&curve);
    assert_eq!(points.len(), 1001);
    let max = points.iter().map(|r| r[1].clone()).max_by(|a, b| {
        a.parse::<f64>().unwrap().total_cmp(&b.parse::<f64>().unwrap())
    });
    assert_eq!(max.unwrap(), parse_rows(&cell)[0][3]);
    assert_eq!(points[0][0], "1.000000e+00");
}

#[test]
fn table_layout() {
    let text = stdout(&["table", "3", "--xmax", "1e4", "--samples-per-decade", "5"]);
    assert!(csv_body(&text).starts_with("M,kappa,alpha=0.1,alpha=0.25,alpha=0.5,alpha=0.75,alpha=0.9\n"));
    let rows = parse_rows(&text);
    assert_eq!(rows.len(), 18);
    assert_eq!((rows[0][0].as_str(), rows[0][1].as_str()), ("50", "1"));
    assert_eq!((rows[17][0].as_str(), rows[17][1].as_str()), ("200", "6"));

    let text = stdout(&["table", "4", "--grid", "8"]);
    let rows = parse_rows(&text);
    let labels: Vec<_> = rows.iter().map(|r| format!("{}/{}", r[0], r[1])).collect();
    assert_eq!(labels, ["50/eps", "50/eps_inf", "100/eps", "100/eps_inf", "200/eps", "200/eps_inf"]);
}

#[test]
fn errors_exit_nonzero() {
    let usage = fracpow(&["table", "8"]);
    assert_eq!(usage.status.code(), Some(2));
    for args in [
        &["scalar-curve", "--xmax", "0.5"][..],
        &["scalar-error", "--alpha", "1.5"][..],
        &["scalar-error", "--rule", "simpson", "--M", "51"][..],
        &["scalar-error", "--kappa", "0.5"][..],
        &["solve", "--grid", "1", "--out", "/nonexistent/dir/x"][..],
    ] {
        let out = fracpow(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"), "{args:?}");
    }
    let bad = fracpow(&["scalar-error", "--rule", "simpson", "--M", "51"]);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("M = 51"));
}

fn solve_in(dir: &Path, extra: &[&str]) -> serde_json::Value {
    let out = dir.join("run");
    let mut args = vec!["solve", "--grid", "32", "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    serde_json::from_str(&stdout(&args)).unwrap()
}

#[test]
fn solve_writes_dumps_and_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let report = solve_in(dir.path(), &["--alpha", "0.25", "--rule", "simpson"]);
    let metrics: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("run.metrics.json")).unwrap()).unwrap();
    assert_eq!(metrics["metadata"], report["metadata"]);
    assert_eq!(metrics["metadata"]["kappa"], 5.0);
    assert_eq!(metrics["metadata"]["M"], 100);
    assert!(metrics["metadata"]["eps"].as_f64().unwrap() < 1e-6);

    let u = fracpow::io::load(&dir.path().join("run.u.json")).unwrap();
    let y = fracpow::io::load(&dir.path().join("run.y.json")).unwrap();
    assert_eq!(u.grid().n1, 32);
    assert_eq!(y.max(), 1.0);
    assert!((u.max() - metrics["umax"].as_f64().unwrap()).abs() == 0.0);

    let header: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("run.u.json")).unwrap()).unwrap();
    for key in ["l1", "l2", "N1", "N2", "layout"] {
        assert!(header.get(key).is_some(), "{key}");
    }
    assert_eq!(header["meta"]["command"], "solve");
}

#[test]
fn solve_replay_reproduces_dumps() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let report = solve_in(a.path(), &["--rhs", "bubble", "--format", "bin", "--alpha", "0.75"]);
    let mut argv: Vec<String> = report["manifest"]["args"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    argv.splice(0..0, ["solve".to_string(), "--out".to_string(), b.path().join("run").display().to_string()]);
    stdout(&argv.iter().map(String::as_str).collect::<Vec<_>>());
    for name in ["run.u.bin", "run.y.bin"] {
        let first = std::fs::read(a.path().join(name)).unwrap();
        let second = std::fs::read(b.path().join(name)).unwrap();
        assert_eq!(first, second, "{name}");
    }
}

#[test]
fn solvers_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cg = solve_in(dir.path(), &["--solver", "cg", "--M", "50"]);
    let fast = solve_in(dir.path(), &["--solver", "fast", "--M", "50"]);
    let (e1, e2) = (cg["metadata"]["eps"].as_f64().unwrap(), fast["metadata"]["eps"].as_f64().unwrap());
    assert!((e1 - e2).abs() <= 1e-10, "{e1:e} vs {e2:e}");
}

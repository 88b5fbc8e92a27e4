use std::fs;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paritykick"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const CONFIG: &str = r#"
total_time = 1.0
samples = 50
outputs = ["cv", "pairwise"]

[model]
kind = "ising_chain"
n = 3
j = [2.0, 4.0]
h = [0.0, 6.0, 0.0]

[initial_state]
kind = "ghz"

[schedule]
kick = "auto"
half_period = 0.1
"#;

#[test]
fn run_writes_csv_with_header_and_closed_columns() {
    let dir = tempfile::tempdir().unwrap();
    let (csv, free, report) = (
        dir.path().join("t.csv"),
        dir.path().join("f.csv"),
        dir.path().join("r.json"),
    );
    let o = bin(&[
        "run",
        "--preset",
        "fig2",
        "--csv",
        csv.to_str().unwrap(),
        "--free-csv",
        free.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "t,cv,c12,c13,c23,cv_closed,c12_closed,c13_closed,c23_closed,phase,cycle"
    );
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first.len(), 11);
    assert!(first[5].parse::<f64>().is_ok());
    assert_eq!(first[9], "cycle_first_half");

    let free_text = fs::read_to_string(&free).unwrap();
    assert!(free_text.lines().nth(1).unwrap().ends_with(",free,"));

    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["kick"], "YZY");
    assert!(json["summary"]["max_residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn config_file_runs_and_blanks_unrequested_columns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.toml");
    fs::write(&path, CONFIG).unwrap();
    let o = bin(&["run", "--config", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert!(row[1].parse::<f64>().is_ok());
    assert!(row[5..9].iter().all(|f| f.is_empty()));
}

#[test]
fn presets_are_listed() {
    let out = stdout(&bin(&["presets"]));
    for name in ["fig1", "fig2", "fig3a", "fig3b", "fig4"] {
        assert!(out.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn anticommutant_prints_one_string_per_line() {
    let o = bin(&["anticommutant", "--preset", "fig1"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "IYI");
    assert!(lines.iter().any(|l| l == "YZY"));
}

#[test]
fn sweep_accepts_fractions() {
    let o = bin(&["sweep", "--preset", "fig1", "--values", "1/10,1/15"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let rows: Vec<Vec<f64>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert_eq!(
        out.lines().next().unwrap(),
        "half_period,achieved_min,predicted_min"
    );
    assert_eq!(rows.len(), 2);
    assert!(rows[1][1] > rows[0][1]);
    for r in &rows {
        assert!((r[1] - r[2]).abs() < 1e-8);
    }
}

#[test]
fn validation_failures_exit_with_two() {
    let o = bin(&["run", "--preset", "fig9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fig4"));

    let dir = tempfile::tempdir().unwrap();
    let bad_key = dir.path().join("bad.toml");
    fs::write(&bad_key, format!("colour = 1\n{CONFIG}")).unwrap();
    assert_eq!(
        bin(&["run", "--config", bad_key.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let commuting = dir.path().join("commuting.toml");
    fs::write(&commuting, CONFIG.replace("\"auto\"", "\"IXI\"")).unwrap();
    let o = bin(&["run", "--config", commuting.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("IXI"));

    assert_eq!(
        bin(&["sweep", "--preset", "fig1", "--values", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn fig4_csv_is_byte_identical_across_runs() {
    let a = bin(&["run", "--preset", "fig4"]);
    let b = bin(&["run", "--preset", "fig4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

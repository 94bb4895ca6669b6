use std::fs;
use std::process::{Command, Output};

use lcdkit::oracle::CensusReport;
use serde_json::Value;

fn lcdkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcdkit"))
        .args(args)
        .env_remove("LCDKIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lcdkit(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn check_reports_type() {
    assert_eq!(
        stdout(&["check", "--field", "2", "--gen", "110;011"]),
        "LCD: yes, type EO\n"
    );
    assert_eq!(
        stdout(&["check", "--field", "3", "--gen", "100"]),
        "LCD: yes, type Plus\n"
    );
    assert_eq!(
        stdout(&["check", "--gen", "11"]),
        "LCD: no, hull dimension 1\n"
    );
}

#[test]
fn count_matches_library() {
    assert_eq!(
        stdout(&["count", "--field", "2", "--n", "4", "--k", "2"]),
        "20\n"
    );
    assert_eq!(
        stdout(&["count", "--field", "3", "--n", "3", "--k", "1", "--type", "minus"]),
        "6\n"
    );
    let big = stdout(&["count", "--n", "64", "--k", "32"]);
    assert_eq!(
        big.trim(),
        lcdkit::counting::count_lcd_binary(64, 32, None)
            .unwrap()
            .to_string()
    );
    assert!(!big.contains('e'));
}

#[test]
fn canonical_prints_both_matrices() {
    assert_eq!(
        stdout(&[
            "canonical",
            "--type",
            "OO",
            "--n",
            "3",
            "--k",
            "2",
            "--field",
            "2"
        ]),
        "G: 100;010\nH: 001\n"
    );
}

#[test]
fn transporter_and_shorten() {
    assert_eq!(
        stdout(&["transporter", "--gen1", "10", "--gen2", "01"]),
        "01;10\n"
    );
    assert_eq!(
        stdout(&["shorten", "--gen", "110;011", "--coord", "0"]),
        "111\n"
    );
}

#[test]
fn normalize_and_basis() {
    let text = stdout(&["normalize", "--sym", "11;10"]);
    assert!(text.contains("shape: IdentityBlock"));
    assert!(text.contains("Q: 10;11"));
    let text = stdout(&["basis", "--field", "3", "--gen", "110"]);
    assert!(text.starts_with("kind: DiagOneDelta\ndelta: 2\n"));
}

#[test]
fn exit_codes() {
    let out = lcdkit(&["check", "--gen", "1x0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lcdkit(&["transporter", "--gen1", "100", "--gen2", "111"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("different types"));
    assert_eq!(lcdkit(&["basis", "--gen", "11"]).status.code(), Some(1));
    assert_eq!(lcdkit(&["count", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        lcdkit(&["count", "--field", "4", "--n", "3", "--k", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn json_round_trips() {
    let commands: [&[&str]; 8] = [
        &["--json", "check", "--gen", "110;011"],
        &["--json", "basis", "--field", "5", "--gen", "1000;0110"],
        &["--json", "normalize", "--field", "3", "--sym", "01;10"],
        &["--json", "shorten", "--gen", "10000;01100;00111"],
        &["--json", "count", "--n", "40", "--k", "20", "--type", "OE"],
        &["--json", "enumerate", "--n", "4"],
        &["--json", "dmax", "--nmax", "4"],
        &[
            "--json",
            "canonical",
            "--type",
            "minus",
            "--n",
            "4",
            "--k",
            "2",
            "--field",
            "7",
        ],
    ];
    for args in commands {
        let text = stdout(args);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&v).unwrap() + "\n",
            text,
            "{args:?}"
        );
    }
}

#[test]
fn enumerate_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("c.json");
    let csv_path = dir.path().join("c.csv");
    stdout(&[
        "enumerate",
        "--field",
        "2",
        "--n",
        "4",
        "--out",
        json_path.to_str().unwrap(),
    ]);
    stdout(&[
        "enumerate",
        "--field",
        "2",
        "--n",
        "4",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    let report = CensusReport::from_json(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(
        report,
        lcdkit::oracle::census(4, lcdkit::Field::binary()).unwrap()
    );
    assert_eq!(fs::read_to_string(&csv_path).unwrap(), report.to_csv());
}

#[test]
fn enumerate_reuses_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = [
        "enumerate",
        "--field",
        "3",
        "--n",
        "3",
        "--cache",
        cache.to_str().unwrap(),
    ];
    let first = stdout(&args);
    let files: Vec<_> = fs::read_dir(&cache).unwrap().collect();
    assert_eq!(files.len(), 1);
    let path = files[0].as_ref().unwrap().path();
    // a doctored cached report is served back, proving it was reused
    let doctored = fs::read_to_string(&path)
        .unwrap()
        .replacen("\"d_lcd\": 2", "\"d_lcd\": 99", 1);
    fs::write(&path, doctored).unwrap();
    let second = stdout(&args);
    assert_ne!(first, second);
    assert!(second.contains(",99,"));
    assert_eq!(stdout(&["enumerate", "--field", "3", "--n", "3"]), first);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lcdkit"))
        .args(["enumerate", "--n", "6"])
        .env("LCDKIT_BUDGET", "2^4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

use std::process::{Command, Output};

use redcyc::cli::{exit_code, VERIFY_COLUMNS};
use redcyc::Error;
use serde_json::Value;

fn redcyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_redcyc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = redcyc(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(redcyc(&["count", "--m", "12"]).status.code(), Some(0));
    assert_eq!(
        redcyc(&["verify", "--q", "13", "--m", "12"]).status.code(),
        Some(0)
    );
    assert_eq!(redcyc(&["--help"]).status.code(), Some(0));
    for bad in [
        &["count", "--m", "0"][..],
        &["verify", "--q", "9999"],
        &["verify", "--q", "59"],
        &["census", "--q", "7", "--m", "14"],
        &["reps", "--q", "7", "--m", "4"],
        &["sweep"],
        &["sweep", "--m-max", "0"],
        &["sweep", "--q-max", "13", "--jobs", "0"],
        &["count"],
        &["frobnicate"],
    ] {
        let out = redcyc(bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(out.stdout.is_empty(), "{bad:?} wrote to stdout");
    }
    assert_eq!(exit_code(&Error::Internal("x".into())), 1);
    assert_eq!(exit_code(&Error::LemmaViolation("x".into())), 1);
    assert_eq!(exit_code(&Error::ResourceLimit("x".into())), 2);
}

#[test]
fn json_round_trips() {
    for args in [
        &["count", "--m", "720720", "--format", "json"][..],
        &["verify", "--q", "9", "--format", "json"],
        &["reps", "--q", "13", "--m", "12", "--format", "json"],
        &["census", "--q", "5", "--m", "8", "--format", "json"],
    ] {
        let text = stdout(args);
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["schema_version"], 1);
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn csv_and_json_agree() {
    let json: Value =
        serde_json::from_str(&stdout(&["sweep", "--m-max", "60", "--format", "json"])).unwrap();
    let csv = stdout(&["sweep", "--m-max", "60", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        VERIFY_COLUMNS
    );
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(rows) {
        for (col, cell) in VERIFY_COLUMNS.iter().zip(rec) {
            let expected = match &row[col] {
                Value::Null => String::new(),
                v => v.to_string(),
            };
            assert_eq!(cell, expected, "column {col}");
        }
    }
    assert_eq!(json["summary"]["failed"], 0);
}

#[test]
fn table_lists_every_row() {
    let table = stdout(&["reps", "--q", "7", "--m", "6"]);
    let body: Vec<&str> = table
        .lines()
        .skip(1)
        .take_while(|l| !l.starts_with("note:"))
        .collect();
    assert_eq!(body.len(), 7);
    assert!(table.contains("classes: 7"));
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("verify.csv");
    let out = redcyc(&[
        "verify",
        "--q",
        "7",
        "--format",
        "csv",
        "--quiet",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["verify", "--q", "7", "--format", "csv"]));
    assert_eq!(written.lines().count(), 5);
}

#[test]
fn extension_field_input() {
    let json: Value =
        serde_json::from_str(&stdout(&["verify", "--q", "3^2", "--format", "json"])).unwrap();
    assert_eq!(json["params"]["q"], 9);
    let ms: Vec<u64> = json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["m"].as_u64().unwrap())
        .collect();
    assert_eq!(ms, [1, 2, 4, 8]);
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn supersat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supersat"))
        .args(args)
        .env_remove("SUPERSAT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn counts_k5() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("5 10\n");
    for u in 0..5 {
        for v in u + 1..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let file = write(dir.path(), "k5.txt", &text);
    let o = supersat(&["count", &file]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["triangles"], 10);
    assert_eq!(v["bowties"], 15);
}

#[test]
fn malformed_input_exits_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.txt", "4 2\n0 1\n1 x\n");
    let o = supersat(&["count", &file]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"), "{:?}", o.stderr);
}

#[test]
fn construct_round_trips_through_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ub.g6");
    let o = supersat(&[
        "construct", "upper-bound", "--n", "12", "--q", "2", "--graph-format", "graph6", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = supersat(&["count", out.to_str().unwrap(), "--input-format", "graph6"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["bowties"].as_u64().unwrap() > 0);

    let o = supersat(&["construct", "upper-bound", "--n", "12", "--q", "2"]);
    assert!(stdout(&o).starts_with("12 39\n"));
}

#[test]
fn unrealizable_profile_exits_3() {
    let o = supersat(&["construct", "trifree", "--alpha", "3", "--a", "1", "--beta", "3", "--b", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(supersat(&["verify", "--n-range", "7..5", "--q-range", "1"]).status.code(), Some(1));
    assert_eq!(supersat(&["formula", "--n", "40"]).status.code(), Some(1));
    assert_eq!(supersat(&["bogus"]).status.code(), Some(1));
    assert_eq!(supersat(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_and_tsv_agree() {
    let args = ["formula", "--n-range", "40..48..4", "--q-range", "1..3"];
    let json: Value = serde_json::from_str(&stdout(&supersat(&args))).unwrap();
    let tsv = stdout(&supersat(&[&args[..], &["--format", "tsv"]].concat()));
    let mut lines = tsv.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    let rows: Vec<&str> = lines.collect();
    let json = json.as_array().unwrap();
    assert_eq!(rows.len(), json.len());
    for (row, obj) in rows.iter().zip(json) {
        for (key, cell) in header.iter().zip(row.split('\t')) {
            assert_eq!(obj[*key].to_string(), cell);
        }
    }
}

#[test]
fn verify_small_grid() {
    let o = supersat(&["verify", "--n-range", "5..6", "--q-range", "1..2", "--threads", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want = [(5, 1, 2), (5, 2, 6), (6, 1, 4), (6, 2, 12)];
    for (row, (n, q, h)) in rows.as_array().unwrap().iter().zip(want) {
        assert_eq!((row["n"].as_u64(), row["q"].as_u64()), (Some(n), Some(q)));
        assert_eq!(row["oracle"], h);
        assert_eq!(row["oracle_matches"], true);
        assert_eq!(row["violation"], false);
    }
}

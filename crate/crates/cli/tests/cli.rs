//! End-to-end runs of the `polygram` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn polygram(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polygram"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_b_csv_has_header_grid_and_note() {
    let o = polygram(&["table", "b", "--k", "10", "--n", "10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,n=1,n=2,n=3,n=4,n=5,n=6,n=7,n=8,n=9,n=10");
    assert_eq!(lines[3], "3,0,0,1,3,8,17,32,55,89,136");
    assert_eq!(lines[5], "5,0,0,0,0,1,5,19,58,154,365");
    assert_eq!(lines.len(), 12);
    assert!(lines[11].starts_with("# "));
    assert!(!text.contains('\r'));
}

#[test]
fn table_json_uses_decimal_strings() {
    let o = polygram(&["table", "c", "--k", "3", "--n", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["table"], "c");
    assert_eq!(v["columns"].as_array().unwrap().len(), 6);
    assert_eq!(v["entries"][2]["values"][5], "59");
    assert_eq!(v["notes"].as_array().unwrap().len(), 0);
}

#[test]
fn table_s_entry() {
    let text = stdout(&polygram(&[
        "table", "s", "--k", "3", "--n", "3", "--m", "3",
    ]));
    assert_eq!(text.lines().next(), Some("k,n,m=1,m=2,m=3"));
    assert!(text.lines().any(|l| l == "2,2,3,9,18"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn expand_commands() {
    assert_eq!(stdout(&polygram(&["expand", "--k", "1"])), "zeta(x1)\n");
    assert_eq!(
        stdout(&polygram(&["expand", "--k", "2"])),
        "zeta(x1, x2-1) + zeta(x2, x1-1) + zeta(x1+x2-1)\n"
    );
    assert_eq!(
        stdout(&polygram(&["expand", "--k", "4", "--count-only"])),
        "75\n"
    );
    let refused = polygram(&["expand", "--k", "9"]);
    assert_eq!(refused.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("cap"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["table", "b", "--n", "0"],
        vec!["table", "q"],
        vec!["verify", "--max-area", "15"],
        vec!["frobnicate"],
    ] {
        let o = polygram(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_passes_with_fixtures_and_is_deterministic() {
    let dir = fixtures().join("oeis");
    let args = [
        "verify",
        "--max-area",
        "8",
        "--max-volume",
        "7",
        "--oeis-dir",
        dir.to_str().unwrap(),
    ];
    let first = polygram(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let report = stdout(&first);
    assert!(!report.contains("FAIL"));
    assert!(!report.contains("SKIP"));
    assert!(report.contains("PASS  A006958"));
    assert_eq!(polygram(&args).stdout, first.stdout);
}

#[test]
fn verify_without_bfiles_skips_them() {
    let o = polygram(&["verify", "--max-area", "6", "--max-volume", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let report = stdout(&o);
    assert_eq!(report.matches("SKIP").count(), 5);
    assert!(report.trim_end().ends_with("5 skipped"));
}

#[test]
fn verify_flags_the_published_table1() {
    let csv = fixtures().join("table1_published.csv");
    let o = polygram(&[
        "verify",
        "--max-area",
        "6",
        "--max-volume",
        "5",
        "--table1",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report = stdout(&o);
    let line = report.lines().find(|l| l.starts_with("FAIL")).unwrap();
    assert!(
        line.contains("b(3,8) (n=8 total 738 vs 242): 551 != 55"),
        "{line}"
    );
    assert_eq!(report.matches("FAIL").count(), 1);
}

#[test]
fn verify_reports_a_broken_bfile() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b000891.txt"), "0 1\n1 3\n2 x\n").unwrap();
    let o = polygram(&[
        "verify",
        "--max-area",
        "5",
        "--max-volume",
        "4",
        "--oeis-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report = stdout(&o);
    assert!(report.contains("FAIL  A000891"));
    assert!(report.contains("line 3"));
}

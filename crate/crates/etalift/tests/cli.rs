//! End-to-end checks of the command-line interface.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etalift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn degreeset_ascii_and_pgm() {
    let art = stdout(&["degreeset", "--p", "2", "--e", "2", "--eta", "2", "--d", "2"]);
    assert_eq!(art, "....\n#...\n#...\n###.\n");
    let pgm = stdout(&[
        "degreeset", "--p", "2", "--e", "4", "--eta", "2", "--d", "14", "--format", "pgm",
    ]);
    assert!(pgm.starts_with("P2\n16 16\n255\n"));
    let wrm = stdout(&[
        "degreeset", "--p", "2", "--e", "2", "--eta", "2", "--d", "2", "--kind", "wrm",
    ]);
    assert_eq!(wrm, "....\n....\n#...\n###.\n");
    // --gamma 0.5 at q = 16 resolves to d = 8.
    let by_gamma = stdout(&[
        "degreeset", "--p", "2", "--e", "4", "--eta", "2", "--gamma", "0.5",
    ]);
    let by_d = stdout(&["degreeset", "--p", "2", "--e", "4", "--eta", "2", "--d", "8"]);
    assert_eq!(by_gamma, by_d);
}

#[test]
fn degreeset_shaded_has_c_grey_levels() {
    let pgm = stdout(&[
        "degreeset", "--p", "2", "--e", "5", "--eta", "2", "--c", "4", "--format", "pgm",
        "--shade",
    ]);
    let mut levels: Vec<&str> = pgm
        .lines()
        .skip(3)
        .flat_map(|l| l.split_whitespace())
        .filter(|&v| v != "0" && v != "255")
        .collect();
    levels.sort_unstable();
    levels.dedup();
    assert_eq!(levels.len(), 4, "c = 4 grey levels");
}

#[test]
fn dim_table_reproduces_known_rows() {
    let csv = stdout(&[
        "dim-table", "--p", "2", "--eta", "2", "--alpha", "2", "--e", "3..6",
    ]);
    assert!(csv.contains("2,2,2,,3,64,25,0.3906,11"));
    assert!(csv.contains("2,2,2,,6,4096,2513,0.6135,1953"));
}

#[test]
fn bounds_rate_row() {
    let csv = stdout(&["bounds", "--p", "2", "--eta", "2", "--c", "6"]);
    assert!(csv.ends_with("2,2,6,0.5533\n"), "{csv}");
    let seq = stdout(&[
        "bounds", "--p", "3", "--eta", "2", "--sequences", "--alpha", "2", "--m-max", "3",
    ]);
    assert!(seq.contains("3,196,156,264"), "m=3 row of T/W/N: {seq}");
}

#[test]
fn local_exp_csv() {
    let csv = stdout(&[
        "local-exp", "--p", "2", "--e", "3", "--eta", "2", "--d", "4", "--delta", "0.05",
        "--trials", "50", "--seed", "9",
    ]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("q,p,e,eta,d,delta,trials,failures,rate,ci_lo,ci_hi,bound")
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("8,2,3,2,4,0.05,50,"));
}

#[test]
fn pir_demo_transcript_and_batch() {
    let json = stdout(&[
        "pir-demo", "--p", "2", "--e", "4", "--eta", "2", "--b", "1", "--u", "1", "--seed",
        "7",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).expect("valid JSON");
    assert_eq!(value["ok"], true);
    assert_eq!(value["d"], 11);
    assert_eq!(value["bits_up"], 64);
    assert_eq!(value["byzantine"].as_array().unwrap().len(), 1);

    let csv = stdout(&[
        "pir-demo", "--p", "2", "--e", "3", "--eta", "2", "--b", "0", "--u", "0",
        "--trials", "5", "--seed", "3",
    ]);
    assert!(csv.starts_with("trial,index,t0,ok,recovered,bits_up,bits_down\n"));
    assert_eq!(csv.matches(",true,").count(), 5);
}

#[test]
fn privacy_audit_report() {
    let csv = stdout(&[
        "privacy-audit", "--p", "2", "--e", "3", "--eta", "2", "--tau", "2",
    ]);
    let row = csv.lines().nth(1).unwrap();
    assert!(row.starts_with("2,true,28,"), "{row}");
    assert!(row.ends_with("0.000000,0.000000"), "exact audit reports zero: {row}");
}

#[test]
fn identical_seeds_give_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = run(&[
            "pir-demo", "--p", "2", "--e", "3", "--eta", "2", "--b", "1", "--u", "0",
            "--seed", "11", "--out", path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(read(&a), read(&b), "same seed, same bytes");
}

fn read(p: &Path) -> Vec<u8> {
    std::fs::read(p).unwrap()
}

#[test]
fn errors_exit_nonzero() {
    let out = run(&["degreeset", "--p", "4", "--e", "1", "--eta", "2", "--d", "1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));
    let out = run(&["dim-table", "--p", "2", "--eta", "2", "--e", "3..4"]);
    assert!(!out.status.success(), "one of --alpha/--c required");
}

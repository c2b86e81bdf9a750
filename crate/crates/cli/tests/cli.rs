//! End-to-end tests of the `qhopf` binary: golden tables, determinism,
//! TSV/JSON row parity and exit codes.

use std::process::Command;

fn qhopf(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qhopf")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qhopf(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn klein_trivial_golden() {
    let got = stdout(&["classify", "abelian", "--group", "abelian:2,2", "--datum", "c=0,0;c12=0"]);
    assert_eq!(got, include_str!("golden/klein_trivial.tsv"));
    assert_eq!(got.lines().count(), 6);
}

#[test]
fn c2c6_row_golden() {
    let got = stdout(&["classify", "abelian", "--group", "abelian:2,6", "--datum", "c=1,3;c12=0"]);
    assert_eq!(got, include_str!("golden/c2c6_130.tsv"));
}

#[test]
fn byte_identical_across_runs() {
    let args =
        ["classify", "abelian", "--group", "abelian:2,6", "--datum", "c=0,3;c12=1"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn tsv_json_row_parity() {
    let base = ["classify", "abelian", "--group", "abelian:2,2", "--datum", "c=1,0;c12=1"];
    let tsv = stdout(&base);
    let mut json_args = base.to_vec();
    json_args.extend(["--format", "json"]);
    let json = stdout(&json_args);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = parsed.as_array().unwrap();
    let tsv_rows: Vec<&str> = tsv.lines().collect();
    assert_eq!(rows.len(), tsv_rows.len());
    for (obj, line) in rows.iter().zip(&tsv_rows) {
        let cells: Vec<&str> = line.split('\t').collect();
        assert_eq!(obj["f"].as_str().unwrap(), cells[2]);
        assert_eq!(obj["lambda"].as_str().unwrap(), cells[3]);
        assert_eq!(obj["v_exps"].as_str().unwrap(), cells[5]);
    }
}

#[test]
fn empty_table_exits_zero() {
    let out = qhopf(&["classify", "abelian", "--group", "abelian:3,3", "--datum", "c=0,0;c12=0"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn orbit_counts() {
    assert_eq!(stdout(&["orbits", "--dim4"]).trim(), "12");
    assert_eq!(stdout(&["orbits", "--cyclic", "4"]).trim(), "4");
}

#[test]
fn ddn_table_counts() {
    let got = stdout(&["classify", "ddn", "--n", "2", "--p", "all"]);
    let lines: Vec<&str> = got.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| {
        let p: u64 = l.split('\t').nth(1).unwrap().parse().unwrap();
        p == 1 || p == 3
    }));
}

#[test]
fn snf_output_shape() {
    let dir = std::env::temp_dir().join(format!("qhopf-snf-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("mat.txt");
    std::fs::write(&file, "2 0\n0 3\n").unwrap();
    let got = stdout(&["snf", file.to_str().unwrap()]);
    // Three blocks: U (2 rows), diag (1 row), V (2 rows).
    let blocks: Vec<&str> = got.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 3);
    assert_eq!(blocks[1].trim(), "1 6");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_reports_all_pass() {
    for preset in ["h2", "h4", "hq8:+", "hq8:-", "nichols:2", "kGw:abelian:2,2:c=0,1;c12=1"] {
        let got = stdout(&["verify", "--preset", preset]);
        assert!(got.lines().count() >= 18, "{preset}");
        assert!(
            got.lines().all(|l| l.split('\t').nth(1) == Some("PASS")),
            "{preset}: {got}"
        );
    }
}

#[test]
fn biproduct_check_passes() {
    let got = stdout(&[
        "biproduct",
        "--group",
        "abelian:2,2",
        "--datum",
        "c=0,1;c12=1",
        "--pair",
        "f=1,1;lambda=0,0",
        "--check",
    ]);
    let mut lines = got.lines();
    assert_eq!(lines.next().unwrap().split('\t').nth(1), Some("8"));
    assert!(lines.all(|l| l.split('\t').nth(1) == Some("PASS")));
}

#[test]
fn exit_codes() {
    // Domain error (bad datum): 1.
    let out = qhopf(&["classify", "abelian", "--group", "abelian:2,2", "--datum", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    // Inadmissible pair: 1.
    let out = qhopf(&[
        "biproduct",
        "--group",
        "abelian:2,2",
        "--datum",
        "c=1,1;c12=1",
        "--pair",
        "f=1,1;lambda=0,0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // Usage error (unknown flag): 2.
    let out = qhopf(&["orbits", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // Cap exceeded: 1.
    let out = qhopf(&[
        "classify", "abelian", "--group", "abelian:2,6", "--datum", "c=0,0;c12=0", "--cap", "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("qhopf-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.tsv");
    let direct = stdout(&["classify", "cyclic", "--m", "8", "--c", "2"]);
    let out = qhopf(&[
        "classify", "cyclic", "--m", "8", "--c", "2", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn boundary_datum_warns_but_runs() {
    let out = qhopf(&["classify", "abelian", "--group", "abelian:2,6", "--datum", "c=0,0;c12=2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

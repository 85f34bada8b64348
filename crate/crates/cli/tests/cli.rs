use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ied(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ied-color"))
        .args(args)
        .env_remove("IED_COLOR_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TRIANGLE: &str = "H 6 3\nE 1 2 3\nE 3 4 5\nE 5 6 1\n";

#[test]
fn sequence_bound_reaches_two() {
    let o = ied(&[
        "bounds",
        "--k",
        "10",
        "--delta",
        "2",
        "--i",
        "9",
        "--mode",
        "sequences",
        "--pi-size",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "R=2\n");
}

#[test]
fn bounds_json() {
    let o = ied(&["--json", "bounds", "--k", "4", "--delta", "2", "--i", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["r"], 15);
    assert_eq!(v["mode"], "sets");
}

#[test]
fn color_then_verify() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", TRIANGLE);
    for mode in ["sets", "multisets", "sequences"] {
        let o = ied(&["color", "--in", s(&h), "--mode", mode, "--seed", "7"]);
        assert_eq!(o.status.code(), Some(0), "{mode}");
        let col = write(&dir, "out.col", &stdout(&o));
        let v = ied(&[
            "verify",
            "--in",
            s(&h),
            "--coloring",
            s(&col),
            "--mode",
            mode,
        ]);
        assert_eq!(v.status.code(), Some(0), "{mode}");
        assert_eq!(stdout(&v), "ok\n");
    }
}

#[test]
fn verify_reports_violations() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", TRIANGLE);
    let col = write(&dir, "bad.col", "1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n");
    let o = ied(&["verify", "--in", s(&h), "--coloring", s(&col)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("violation: edges 1 and 2"));
}

#[test]
fn colors_must_come_from_the_lists() {
    let dir = TempDir::new().unwrap();
    let text = format!("{TRIANGLE}L 1 1 2\nL 2 1 2\nL 3 1 2\nL 4 1 2\nL 5 1 2\nL 6 1 2\n");
    let h = write(&dir, "h.hg", &text);
    let col = write(&dir, "c.col", "1 1\n2 2\n3 3\n4 1\n5 2\n6 1\n");
    let o = ied(&["verify", "--in", s(&h), "--coloring", s(&col)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("outside its list"));
}

#[test]
fn same_seed_same_bytes() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", TRIANGLE);
    let args = ["color", "--in", s(&h), "--lists", "3", "--seed", "11"];
    assert_eq!(ied(&args).stdout, ied(&args).stdout);
}

#[test]
fn decode_check_round_trips() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", TRIANGLE);
    let o = ied(&[
        "decode-check",
        "--in",
        s(&h),
        "--mode",
        "multisets",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("round-trip OK, "));
    // Too few colors: the run hits the cap but the log still decodes.
    let o = ied(&[
        "decode-check",
        "--in",
        s(&h),
        "--lists",
        "1",
        "--max-iters",
        "40",
    ]);
    assert_eq!(stdout(&o), "round-trip OK, 40 iterations (cap reached)\n");
}

#[test]
fn exhausted_runs_exit_one() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", TRIANGLE);
    let o = ied(&["color", "--in", s(&h), "--lists", "1", "--max-iters", "20"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("# no coloring within 20 iterations"));
}

#[test]
fn oracle_agrees_with_hand_analysis() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", TRIANGLE);
    // Three pairwise meeting triples need three distinct sets over {1, 2},
    // which forces two of them to be {1, 2}.
    assert_eq!(
        ied(&["oracle", "--in", s(&h), "--lists", "2"])
            .status
            .code(),
        Some(1)
    );
    let o = ied(&["oracle", "--in", s(&h), "--lists", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn graph_commands() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.gr", "G 4 4\nE 1 2\nE 2 3\nE 3 4\nE 4 1\n");
    let o = ied(&["dual", "--in", s(&c4)]);
    assert_eq!(stdout(&o), "H 4 4\nE 1 4\nE 1 2\nE 2 3\nE 3 4\n");
    let o = ied(&["total", "--in", s(&c4)]);
    assert!(stdout(&o).starts_with("H 8 4\nE 1 5 8\n"));
    let o = ied(&["gndi", "--in", s(&c4)]);
    assert!(stdout(&o).starts_with("gndi 2\n"));
    let p4 = write(&dir, "p4.gr", "G 4 3\nE 1 2\nE 2 3\nE 3 4\n");
    assert_eq!(stdout(&ied(&["gndi", "--in", s(&p4)])), "gndi 3\n");
    // Forcing two edges at one C4 vertex onto label 1 still leaves a
    // labeling; forcing all four does not.
    let o = ied(&["gndi", "--in", s(&c4), "--forced", "1,2"]);
    assert!(stdout(&o).starts_with("gndi 2\n"));
    let o = ied(&["gndi", "--in", s(&c4), "--forced", "1,2,3,4"]);
    assert_eq!(stdout(&o), "gndi 3\n");
}

#[test]
fn fano_has_no_split() {
    let dir = TempDir::new().unwrap();
    let fano = "H 7 7\nE 1 2 4\nE 2 3 5\nE 3 4 6\nE 4 5 7\nE 5 6 1\nE 6 7 2\nE 7 1 3\n";
    let h = write(&dir, "fano.hg", fano);
    let o = ied(&["property-b", "--in", s(&h)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "none\n");
    let h = write(&dir, "t.hg", TRIANGLE);
    assert_eq!(ied(&["property-b", "--in", s(&h)]).status.code(), Some(0));
}

#[test]
fn gadget_of_one_clause() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.nae", "F 2 1\nC 1 2\n");
    let o = ied(&["gadget", "--in", s(&f), "--girth", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("G 11 10\n"));
    let g = write(&dir, "g.gr", text.as_str());
    assert_eq!(
        stdout(&ied(&["gndi", "--in", s(&g)])).lines().next(),
        Some("gndi 2")
    );
}

#[test]
fn bench_reports_trials_and_reference() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.hg", TRIANGLE);
    let o = Command::new(env!("CARGO_BIN_EXE_ied-color"))
        .args(["bench", "--in", s(&h), "--trials", "4", "--lists", "4"])
        .env("IED_COLOR_THREADS", "2")
        .output()
        .unwrap();
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("trial ")).count(), 4);
    assert!(text.contains("n 6 R 4 n*R*ln(R) 33.271"));
    // The thread count does not change the result.
    let single = Command::new(env!("CARGO_BIN_EXE_ied-color"))
        .args(["bench", "--in", s(&h), "--trials", "4", "--lists", "4"])
        .env("IED_COLOR_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(single.stdout, o.stdout);
}

#[test]
fn input_errors_exit_two_with_line_numbers() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "bad.hg", "H 3 1\n\nE 1 2 x\n");
    let o = ied(&["color", "--in", s(&h)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(ied(&["color"]).status.code(), Some(2));
    assert_eq!(ied(&["frobnicate"]).status.code(), Some(2));
    let missing = dir.path().join("missing.hg");
    assert_eq!(ied(&["color", "--in", s(&missing)]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ied-color"))
        .args(["bench", "--in", s(&write(&dir, "t.hg", TRIANGLE))])
        .env("IED_COLOR_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

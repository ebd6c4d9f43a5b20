use std::fs;
use std::process::{Command, Output};

fn isolate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isolate")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_inline_clique() {
    let out = isolate(&["solve", "--graph", "C~", "--family", "clique", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("note: graph is a 4-clique"));
    assert!(text.contains("iota=1\n"));
    assert!(text.contains("certification=ExactMinimum"));
}

#[test]
fn solve_reads_edge_list_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = isolate(&["solve", "--graph", path.to_str().unwrap(), "--family", "union", "--k", "2"]);
    assert!(stdout(&out).contains("iota=2\n"));
    let out = isolate(&["solve", "--graph", path.to_str().unwrap(), "--family", "cycles"]);
    assert!(stdout(&out).contains("iota=1\n"));
}

#[test]
fn build_special_six_constituents() {
    let out = isolate(&["build-special", "--m", "71", "--k", "5", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let graph6 = lines.next().unwrap();
    assert!(lines.next().unwrap().starts_with("n=36 pure=true k=5 m=71 q=6 r=0"));
    let solved = isolate(&["solve", "--graph", graph6, "--family", "chrom", "--k", "5"]);
    assert!(stdout(&solved).contains("iota=6\n"));
}

#[test]
fn build_special_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    let out = isolate(&["build-special", "--m", "14", "--k", "3", "--seed", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let construct = isolate(&["construct", "--graph", path.to_str().unwrap(), "--k", "3", "--l", "1", "--trace"]);
    let text = stdout(&construct);
    assert!(text.contains("size=3\n"), "{text}");
    assert!(text.contains("bound=3\n"));
    assert!(text.lines().count() > 4);
}

#[test]
fn verify_outputs_are_byte_identical_across_threads() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for threads in ["1", "4"] {
        let path = dir.path().join(format!("t{threads}.jsonl"));
        let out = isolate(&[
            "verify",
            "--max-n",
            "6",
            "--k-min",
            "1",
            "--k-max",
            "5",
            "--l",
            "1,2,3",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        reports.push(fs::read(&path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let text = String::from_utf8(reports.remove(0)).unwrap();
    assert!(text.lines().last().unwrap().contains("\"violations\":0"));
}

#[test]
fn scan_extremal_and_cycle_check() {
    let out = isolate(&["scan-extremal", "--max-n", "5", "--k-min", "2", "--k-max", "2", "--l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"extremal_class\":\"C5_k2\""));
    assert!(text.lines().all(|l| l.contains("\"equality\":true") || l.starts_with("{\"summary\"")));

    let out = isolate(&["cycle-check", "--max-n", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("graph6,n,m,iota_cycles,iota_minreg3,bound,equality,class\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(isolate(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(isolate(&["verify", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(isolate(&["solve", "--graph", "C~", "--family", "nope", "--k", "2"]).status.code(), Some(2));
    assert_eq!(isolate(&["construct", "--graph", "C~", "--k", "4", "--l", "1"]).status.code(), Some(2));
    assert_eq!(isolate(&["verify", "--corpus", "/definitely/missing.g6"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad_out = dir.path().join("no/such/dir/out.jsonl");
    let out = isolate(&["verify", "--max-n", "3", "--out", bad_out.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

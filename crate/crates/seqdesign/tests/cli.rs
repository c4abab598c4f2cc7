use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_seqdesign"));
    c.env_remove("SEQDESIGN_THREADS");
    c
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#') && !l.is_empty()).collect()
}

#[test]
fn gen_kasami_writes_eight_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "kasami", "-m", "3", "-o", "fam.txt"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("fam.txt")).unwrap();
    let lines = data_lines(&text);
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| l.len() == 63));
}

#[test]
fn bad_parameters_exit_2_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "kasami", "-m", "0", "-o", "fam.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid m"));
    assert!(!dir.path().join("fam.txt").exists());
    assert_eq!(run(dir.path(), &["gen", "bent", "-n", "8"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gen"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["corr", "-i", "missing.txt"]).status.code(), Some(2));
    let o = bin().current_dir(dir.path()).env("SEQDESIGN_THREADS", "0").args(["gen", "legendre", "-p", "7"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn conjecture_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["conjecture", "--family", "mt-c", "-n", "4", "--column", "legendre:17"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("x^8+x^7+x^6+x^4+x^2+x+1"));
    assert!(out.contains("x^120+x^105+x^90+x^60+x^30+x^15+1"));
    assert_eq!(out.lines().last(), Some("MATCH"));
}

#[test]
fn identical_runs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--no-header", "gen", "gold", "-n", "5"];
    assert_eq!(run(dir.path(), &args).stdout, run(dir.path(), &args).stdout);
    run(dir.path(), &["--no-header", "gen", "gold", "-n", "5", "-o", "g.txt"]);
    let one = run(dir.path(), &["--threads", "1", "corr", "-i", "g.txt", "--format", "json"]);
    let two = run(dir.path(), &["--threads", "3", "corr", "-i", "g.txt", "--format", "json"]);
    assert_eq!(one.stdout, two.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["max_cross"].as_i64().unwrap().max(v["max_offpeak_auto"].as_i64().unwrap()), 9);
    assert_eq!(v["kind"], "gold");
}

#[test]
fn formats_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(run(d, &["gen", "mseq", "-n", "6", "-o", "m.txt"]).status.code(), Some(0));
    for format in ["pbm", "text"] {
        assert_eq!(run(d, &["fold", "-i", "m.txt", "--rows", "7", "--cols", "9", "--format", format, "-o", "a"]).status.code(), Some(0));
        assert_eq!(run(d, &["unfold", "-i", "a", "-o", "back.txt"]).status.code(), Some(0));
        let a = std::fs::read_to_string(d.join("m.txt")).unwrap();
        let b = std::fs::read_to_string(d.join("back.txt")).unwrap();
        assert_eq!(data_lines(&a), data_lines(&b));
    }
    assert_eq!(run(d, &["fold", "-i", "m.txt", "--rows", "3", "--cols", "21"]).status.code(), Some(2));

    assert_eq!(run(d, &["gen", "mt-a", "-p", "7", "--format", "json", "-o", "a.json"]).status.code(), Some(0));
    let o = run(d, &["complexity", "-i", "a.json", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["length"], 42);
    assert_eq!(v["max_l"], 19);

    assert_eq!(run(d, &["shifts", "mt-b", "-p", "7", "-o", "b.csv"]).status.code(), Some(0));
    let o = run(d, &["hop", "--check", "b.csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max coincidence 2"));
}

#[test]
fn hop_conversion_and_listed_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(d, &["hop", "--source", "kasami", "-m", "3", "-o", "k.csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(d.join("k.csv")).unwrap();
    assert_eq!(data_lines(&text).len(), 8);
    std::fs::write(d.join("h.csv"), "0,0,3,2,5,6,5,2,3\n5,3,3,5,2,6,4,6,2\n").unwrap();
    let o = run(d, &["hop", "--check", "h.csv", "--modulus", "7"]);
    assert!(stdout(&o).contains("max coincidence 2"));
    assert_eq!(run(d, &["hop", "--check", "h.csv"]).status.code(), Some(2));
}

#[test]
fn complexity_of_legendre_17() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["gen", "legendre", "-p", "17", "-o", "l.txt"]);
    let out = stdout(&run(dir.path(), &["complexity", "-i", "l.txt"]));
    assert!(out.contains("member 0 l 8 "));
    assert!(out.contains("x^8+x^7+x^6+x^4+x^2+x+1"));
}

#[test]
fn report_selection() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["report", "table1", "--rows", "bent,kasami", "--length", "255"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Bent\t255\t-\t-\t-\t-\t0.125\treference-only"));
    assert!(out.contains("Small Kasami\t255\tm=4\t255\t12\t"));
    assert_eq!(run(dir.path(), &["report", "table1", "--length", "65535"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["report", "table2", "--rows", "large-kasami"]).status.code(), Some(2));
    let o = run(dir.path(), &["report", "table2", "--rows", "kerdock", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["status"], "reference-only");
}

use std::process::{Command, Output};

use specht_mf::mf::{MatrixFactorization, MfJson};
use specht_mf::specht::{BasisElement, BasisElementJson};
use specht_mf::verify_mf;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht-mf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn discriminant_matches_golden_file_byte_for_byte() {
    let o = run(&["discriminant", "--n", "5", "--coords", "t"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("data/ex315_discriminant_t.txt"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["tableaux", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["specht", "--n", "3", "--partition", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["mf", "--n", "8", "--partition", "8"]).status.code(), Some(2));
    assert_eq!(run(&["mf", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "3"]).status.code(), Some(0));
}

#[test]
fn compare_failure_exits_one() {
    let dir = std::env::temp_dir().join(format!("specht-mf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.txt");
    std::fs::write(&path, "1 ; 0\n0 ; 1\n").unwrap();
    let o = run(&["mf", "--n", "3", "--partition", "2,1", "--compare", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no row/column permutation"));
}

#[test]
fn output_is_deterministic_and_worker_count_independent() {
    let args = ["mf", "--n", "4", "--partition", "3,1", "--tableau", "2", "--format", "json"];
    let a = run(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_specht-mf")).args(args).env("SPECHT_MF_WORKERS", "1").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mf_json_round_trips() {
    let o = run(&["mf", "--n", "4", "--partition", "2,2", "--format", "json"]);
    let json: MfJson = serde_json::from_slice(&o.stdout).unwrap();
    assert!(json.verified);
    let mf = MatrixFactorization::from_json(&json).unwrap();
    assert!(verify_mf(&mf).passed());
    assert_eq!(serde_json::to_value(mf.to_json()).unwrap(), serde_json::to_value(&json).unwrap());
}

#[test]
fn specht_json_round_trips() {
    let o = run(&["specht", "--n", "3", "--partition", "2,1", "--format", "json"]);
    let elems: Vec<BasisElementJson> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(elems.len(), 8);
    for e in &elems {
        assert_eq!(&BasisElement::from_json(e).unwrap().to_json(), e);
    }
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("specht-mf-out-{}.tex", std::process::id()));
    let o = run(&["mf", "--n", "3", "--subgroup", "1,2", "--format", "latex", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("A = \\begin{pmatrix}"));
    assert!(text.contains("e_{1}e_{2}+3e_{3}"));
}

#[test]
fn subgroup_block_in_power_sums() {
    let o = run(&["mf", "--n", "3", "--subgroup", "1,2", "--coords", "s"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("lambda (1) x (2); T 1 | 2 3; coords s"), "{text}");
    assert!(text.ends_with("verified: true\n"));
}

#[test]
fn tableaux_listing() {
    let o = run(&["tableaux", "--n", "3"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("  ")).count(), 4);
    let o = run(&["tableaux", "--n", "3", "--subgroup", "1,2"]);
    assert!(stdout(&o).contains("(1) x (2): 1 tableaux"));
}

#[test]
fn pushforward_reports_blocks() {
    let o = run(&["pushforward", "--n", "3", "--full"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("entries outside the anti-diagonal blocks: 0"));
    assert!(text.contains("block (2,1): z on F then on H gives delta*I: true"));
}

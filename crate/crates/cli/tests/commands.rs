//! The `lmbraid` binary end to end: outputs, files and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn lmbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmbraid")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn field(path: &Path, key: &str) -> String {
    let value: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    value[key].to_string()
}

const CHARACTER_B2: &str = r#"{"format_version": 1, "group": {"kind": "braid", "n": 2}, "scalar_ring": ["t"], "dim": 1, "generators": {"s1": [["t"]]}}"#;

const TRIVIAL_FREE_B3: &str = r#"{"format_version": 1, "group": {"kind": "free-braid", "n": 3}, "scalar_ring": [], "dim": 1,
  "generators": {"g1": [["1"]], "g2": [["1"]], "g3": [["1"]], "s1": [["1"]], "s2": [["1"]]}}"#;

const TRIVIAL_P3: &str = r#"{"format_version": 1, "group": {"kind": "pure", "n": 3}, "scalar_ring": [], "dim": 1,
  "generators": {"a1_2": [["1"]], "a1_3": [["1"]], "a2_3": [["1"]]}}"#;

const BURAU_AT_Q: &str = r#"{"format_version": 1, "group": {"kind": "braid", "n": 2}, "scalar_ring": ["q"], "dim": 2,
  "generators": {"s1": [["0", "q"], ["1", "-q + 1"]]}}"#;

#[test]
fn burau_matrix_on_two_strands() {
    let out = lmbraid(&["gen", "burau", "--n", "2", "--word", "s1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "burau n=2 word=s1:\n[0, s*t]\n[s, -s*t + s]\n");
}

#[test]
fn empty_word_is_the_identity() {
    let out = lmbraid(&["gen", "burau", "--n", "3", "--params", "s=2,t=-1/3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "burau n=3 word=1:\n[1, 0, 0]\n[0, 1, 0]\n[0, 0, 1]\n");
}

#[test]
fn lawrence_matrix_lists_its_basis() {
    let out = lmbraid(&["gen", "lawrence", "--n", "3", "--m", "2", "--word", "s1", "--params", "q=q,t=t"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "lawrence n=3 m=2 word=s1 basis=[e{1,2}, e{1,3}, e{2,3}]:\n[t, 0, 0]\n[0, 0, q]\n[0, 1, -q + 1]\n"
    );
}

#[test]
fn json_and_latex_exports() {
    let out = lmbraid(&["gen", "gassner", "--n", "2", "--word", "s1 s1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["matrices"][0]["rows"][0][0], "t2");
    let out = lmbraid(&["gen", "gassner", "--n", "2", "--word", "s1 s1", "--format", "latex"]);
    assert!(stdout(&out).contains("\\begin{pmatrix}\nt_{2} & -t_{1} t_{2} + t_{2} \\\\"));
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(code(&lmbraid(&["gen", "burau", "--n", "3", "--word", "s1 s4"])), 2);
    assert_eq!(code(&lmbraid(&["gen", "burau", "--n", "3", "--word", "x2"])), 2);
    assert_eq!(code(&lmbraid(&["gen", "burau", "--n", "3", "--params", "s"])), 2);
    assert_eq!(code(&lmbraid(&["gen", "burau", "--n", "3", "--params", "u=1"])), 2);
    assert_eq!(code(&lmbraid(&["gen", "nonsense", "--n", "3"])), 2);
    assert_eq!(code(&lmbraid(&["gen", "lawrence", "--n", "3"])), 2);
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"format_version": 2}"#);
    assert_eq!(code(&lmbraid(&["apply", "--rep", &bad, "--construction", "lm"])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&lmbraid(&["apply", "--rep", missing.to_str().unwrap(), "--construction", "lm"])), 2);
}

#[test]
fn unmet_preconditions_exit_three() {
    assert_eq!(code(&lmbraid(&["gen", "gassner", "--n", "3", "--word", "s1"])), 3);
    assert_eq!(code(&lmbraid(&["gen", "lawrence", "--n", "2", "--m", "3"])), 3);
    let dir = TempDir::new().unwrap();
    let rep = write(&dir, "b2.json", CHARACTER_B2);
    assert_eq!(code(&lmbraid(&["apply", "--rep", &rep, "--construction", "lm"])), 3);
    assert_eq!(code(&lmbraid(&["verify", "hecke", "--n", "3", "--rep", &rep])), 3);
}

#[test]
fn verification_suites_pass() {
    for args in [
        &["verify", "braid-relations", "--n", "4"][..],
        &["verify", "quadratic", "--n", "3"],
        &["verify", "reduced", "--n", "4", "--sequential"],
        &["verify", "gassner", "--n", "3"],
        &["verify", "hecke", "--n", "3", "--m", "2"],
    ] {
        let out = lmbraid(args);
        assert_eq!(code(&out), 0, "{args:?}\n{}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn failing_verification_exits_one() {
    let out = lmbraid(&["verify", "braid-relations", "--n", "3", "--m", "2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL  "));
    assert!(stdout(&out).contains("(Hecke quotient)"));
}

#[test]
fn hecke_suite_on_a_file() {
    let dir = TempDir::new().unwrap();
    let rep = write(&dir, "burau.json", BURAU_AT_Q);
    let out = lmbraid(&["verify", "hecke", "--n", "4", "--rep", &rep, "--quiet"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn long_moody_of_the_trivial_input() {
    let dir = TempDir::new().unwrap();
    let rep = write(&dir, "trivial.json", TRIVIAL_FREE_B3);
    let out = dir.path().join("lm.json");
    let run =
        lmbraid(&["apply", "--rep", &rep, "--construction", "lm", "--params", "t", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&run), 0);
    assert!(run.stdout.is_empty());
    assert_eq!(field(&out, "dim"), "3");
    let check = lmbraid(&["verify", "braid-relations", "--n", "3", "--rep", out.to_str().unwrap()]);
    assert_eq!(code(&check), 0, "{}", stdout(&check));
}

#[test]
fn gassner_from_the_trivial_pure_input() {
    let dir = TempDir::new().unwrap();
    let rep = write(&dir, "p3.json", TRIVIAL_P3);
    let out = lmbraid(&["apply", "--rep", &rep, "--construction", "gassner", "--params", "t1,t2"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["dim"], 2);
    assert_eq!(value["group"]["kind"], "pure");
}

#[test]
fn lawrence_tower_file_round_trip() {
    let dir = TempDir::new().unwrap();
    let rep = write(&dir, "b2.json", CHARACTER_B2);
    let out = dir.path().join("tower.json");
    let path = out.to_str().unwrap();
    assert_eq!(code(&lmbraid(&["apply", "--rep", &rep, "--construction", "lawrence", "--n", "3", "--out", path])), 0);
    assert_eq!(field(&out, "dim"), "12");
    let check = lmbraid(&["verify", "braid-relations", "--n", "3", "--rep", path]);
    assert_eq!(code(&check), 0, "{}", stdout(&check));
    let mismatch = lmbraid(&["verify", "braid-relations", "--n", "4", "--rep", path]);
    assert_eq!(code(&mismatch), 3);
}

#[test]
fn tower_and_subgroup_from_a_character_of_b4() {
    let dir = TempDir::new().unwrap();
    let rep = write(
        &dir,
        "b4.json",
        r#"{"format_version": 1, "group": {"kind": "braid", "n": 4}, "scalar_ring": ["u"], "dim": 1,
  "generators": {"s1": [["u"]], "s2": [["u"]], "s3": [["u"]]}}"#,
    );
    let run = |extra: &[&str]| {
        let mut args = vec!["apply", "--rep", rep.as_str()];
        args.extend_from_slice(extra);
        let out = lmbraid(&args);
        assert_eq!(code(&out), 0, "{extra:?}: {}", String::from_utf8_lossy(&out.stderr));
        serde_json::from_str::<serde_json::Value>(&stdout(&out)).unwrap()
    };
    let one = run(&["--construction", "subgroup", "--params", "t"]);
    assert_eq!((one["group"]["n"].as_u64(), one["dim"].as_u64()), (Some(3), Some(3)));
    let two = run(&["--construction", "tower", "--params", "t", "--iterations", "2"]);
    assert_eq!((two["group"]["n"].as_u64(), two["dim"].as_u64()), (Some(2), Some(6)));
    assert_eq!(
        code(&lmbraid(&["apply", "--rep", &rep, "--construction", "tower", "--params", "t", "--iterations", "4"])),
        3
    );
}

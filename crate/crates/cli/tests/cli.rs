//! End-to-end tests against the compiled binary: worked examples, exit
//! codes, error wording, and byte determinism.

use std::io::Write;
use std::process::{Command, Output};

fn semismall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semismall"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn hilbert_two_prints_the_frozen_polynomial() {
    let out = semismall(&["hilbert", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("motive: [P2](1) + [P2^(2)]"), "{text}");
    assert!(
        text.contains("poincare: 1 + 2*z^2 + 3*z^4 + 2*z^6 + z^8"),
        "{text}"
    );
}

#[test]
fn parabolic_worked_example_lists_four_strata() {
    let out = semismall(&["parabolic", "1", "1", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in [
        "chi=2(0,1)+(1,0)  4            0          0      0      true",
        "chi=(0,2)+(1,0)   3            0          1      0      false",
        "chi=(0,1)+(1,1)   2            1          2      1      true",
        "chi=(1,2)         1            1          3      1      false",
        "motive: [P1 x P1](1) + [P1^(2) x P2]",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn parabolic_weight_count_mismatch_is_an_error() {
    let out = semismall(&["parabolic", "1", "2", "3"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("expects h = 2 flag weights"));
}

#[test]
fn projector_a1_prints_the_scalar_inverse() {
    let out = semismall(&["projector", "A", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-1/2"), "{text}");
    assert!(text.contains("projector idempotent: true"), "{text}");
    assert!(text.contains("lambda * M == I: true"), "{text}");
}

#[test]
fn wreath_reports_rank_class_count_and_literal_labels() {
    let out = semismall(&["wreath", "1", "2", "--literal-monomials"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rank: 5"), "{text}");
    assert!(text.contains("conjugacy classes: 5"), "{text}");
    assert!(text.contains("twist histogram: 1 + 2*z^2 + 2*z^4"), "{text}");
    assert!(
        text.contains("literal monomial labels: 4 (documentation-only; undercounts)"),
        "{text}"
    );
}

#[test]
fn validate_sets_the_exit_code_by_verdict() {
    let mut semi = tempfile::NamedTempFile::new().unwrap();
    write!(
        semi,
        r#"{{"source_dim": 2, "strata": [{{"dim":2,"fiber":0}},{{"dim":0,"fiber":1}}]}}"#
    )
    .unwrap();
    let out = semismall(&["validate", semi.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: semismall"));

    let mut neither = tempfile::NamedTempFile::new().unwrap();
    write!(
        neither,
        r#"{{"source_dim": 3, "strata": [{{"dim":3,"fiber":0}},{{"dim":0,"fiber":2}}]}}"#
    )
    .unwrap();
    let out = semismall(&["validate", neither.path().to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("verdict: neither"));
}

#[test]
fn custom_inputs_replace_the_default_atoms() {
    let mut abelian = tempfile::NamedTempFile::new().unwrap();
    write!(
        abelian,
        r#"{{"name":"A","dim":2,"proper":true,"hodge":[[1,2,1],[2,4,2],[1,2,1]]}}"#
    )
    .unwrap();
    let out = semismall(&[
        "--input",
        abelian.path().to_str().unwrap(),
        "hilbert",
        "1",
        "--mode",
        "hodge",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["motive"], "[A]");
    assert_eq!(value["realization"]["coefficients"]["1,1"], "4");
    assert_eq!(value["realization"]["coefficients"]["0,1"], "2");
}

#[test]
fn rank_only_inputs_get_an_explanatory_error() {
    let mut open = tempfile::NamedTempFile::new().unwrap();
    write!(
        open,
        r#"{{"name":"U","dim":2,"proper":false,"hodge":[[1,0,0],[0,1,0],[0,0,0]]}}"#
    )
    .unwrap();
    let path = open.path().to_str().unwrap().to_string();
    let out = semismall(&["--input", &path, "hilbert", "2"]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.contains("not proper"), "{err}");
    assert!(err.contains("--mode motive"), "{err}");

    let out = semismall(&["--input", &path, "hilbert", "2", "--mode", "motive"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("motive: [U](1) + [U^(2)]"));
}

#[test]
fn series_csv_has_one_row_per_lattice_point() {
    let out = semismall(&[
        "series",
        "parabolic",
        "--trunc-t",
        "1",
        "--trunc-s",
        "1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5, "{text}");
    assert_eq!(lines[0], "t,s,coefficient");
    assert_eq!(lines[1], "0,0,\"1\"");
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["parabolic", "2", "2", "1", "1", "--format", "json", "--mode", "hodge"];
    let first = semismall(&args);
    let second = semismall(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn selfcheck_passes_and_exits_zero() {
    let out = semismall(&["selfcheck"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ok hilbert-vs-goettsche"), "{text}");
    assert!(text.contains("selfcheck: 17/17 passed"), "{text}");
}

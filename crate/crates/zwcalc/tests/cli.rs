//! End-to-end checks of the command-line interface: output formats and
//! exit codes (0 success, 1 verification failure, 2 usage/parse errors).

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn zwcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zwcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_term(name: &str, term: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("zwcalc-test-{name}-{}", std::process::id()));
    fs::write(&path, term).unwrap();
    path
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn interpret_w_term_prints_the_matrix() {
    let path = write_term("w", "(w)\n");
    let out = zwcalc(&["interpret", "--dim", "2", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "4 2\n1,0;0,0\n0,0;1,0\n0,0;1,0\n0,0;0,0\n"
    );
}

#[test]
fn interpret_checks_the_declared_calculus() {
    let path = write_term("h", "(h)");
    let out = zwcalc(&[
        "interpret",
        "--dim",
        "2",
        "--calculus",
        "zw",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("zw"));

    let out = zwcalc(&[
        "interpret",
        "--dim",
        "2",
        "--calculus",
        "zx",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_small_sweep_passes_and_is_byte_stable() {
    let args = ["verify", "--dims", "2", "--trials", "1"];
    let first = zwcalc(&args);
    assert_eq!(code(&first), 0);
    let text = String::from_utf8_lossy(&first.stdout).to_string();
    assert!(text.contains("verified 30 cells: 30 passed, 0 failed"));

    let second = zwcalc(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_rule_filter_and_lemmas() {
    let out = zwcalc(&[
        "verify", "--dims", "2,3", "--trials", "2", "--rules", "S1,Bd1", "--lemmas",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rule S1 d=2"));
    assert!(text.contains("rule Bd1 d=3"));
    assert!(text.contains("verified 4 cells"));

    let out = zwcalc(&["verify", "--rules", "NoSuchRule"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_qufinite_rules_run() {
    let out = zwcalc(&["verify", "--dims", "2", "--trials", "3", "--qufinite"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("qufinite binder_assoc"));
}

#[test]
fn translate_w_into_zx_round_trips_through_the_parser() {
    let path = write_term("w2", "(w)");
    let out = zwcalc(&[
        "translate",
        "--dim",
        "3",
        "--direction",
        "wx",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let term = String::from_utf8_lossy(&out.stdout).trim().to_string();
    // The image must itself be a parseable pure-ZX term.
    let image = write_term("w2-image", &term);
    let back = zwcalc(&[
        "interpret",
        "--dim",
        "3",
        "--calculus",
        "zx",
        image.to_str().unwrap(),
    ]);
    assert_eq!(code(&back), 0);
    assert!(String::from_utf8_lossy(&back.stdout).starts_with("9 3\n"));
}

#[test]
fn translate_rejects_foreign_terms() {
    let path = write_term("tau", "(tau)");
    let out = zwcalc(&[
        "translate",
        "--dim",
        "2",
        "--direction",
        "xw",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn roundtrip_reports_semantic_and_structural() {
    let path = write_term("h2", "(h)");
    let out = zwcalc(&["roundtrip", "--dim", "3", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("semantic: PASS"));
    assert!(text.contains("structural: differs"));

    let path = write_term("z2", "(z 1 1 [])");
    let out = zwcalc(&["roundtrip", "--dim", "2", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("structural: identical"));
}

#[test]
fn counterexample_prints_the_deviation() {
    let out = zwcalc(&["counterexample", "--dim", "3"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("1.000000"));
}

#[test]
fn malformed_input_exits_two_with_a_position() {
    let path = write_term("bad", "(seq (w) (id))");
    let out = zwcalc(&["interpret", "--dim", "2", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte 9"), "{err}");

    let path = write_term("bad2", "(w");
    let out = zwcalc(&["interpret", "--dim", "2", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
}

#[test]
fn missing_file_and_usage_errors_exit_two() {
    let out = zwcalc(&["interpret", "--dim", "2", "/nonexistent/term"]);
    assert_eq!(code(&out), 2);

    let out = zwcalc(&["interpret"]);
    assert_eq!(code(&out), 2);

    let out = zwcalc(&["no-such-subcommand"]);
    assert_eq!(code(&out), 2);

    let out = zwcalc(&["verify", "--dims", "x"]);
    assert_eq!(code(&out), 2);
}

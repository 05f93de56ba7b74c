//! End-to-end tests of the command-line binary: exit codes, stream
//! discipline (reports on stdout, errors on stderr), and the JSON schema
//! of every subcommand.

use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lacunary"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("output is well-formed JSON")
}

#[test]
fn classify_emits_a_full_certificate_on_stdout() {
    let (code, stdout, stderr) = run(&["classify", "x^5 + 2x - 27"]);
    assert_eq!(code, 0);
    assert!(stderr.is_empty(), "unexpected stderr: {stderr}");
    let v = json(&stdout);
    for key in [
        "input",
        "normalized",
        "stripped_power",
        "content",
        "membership",
        "verdict",
        "criterion",
        "f_c",
        "f_n",
        "f_n_certified",
        "notes",
    ] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(v["verdict"], "Irreducible");
    assert_eq!(v["criterion"], "strict_prime_power");
    assert_eq!(v["membership"]["in_scope"], true);
    // Without --verify there is no cross-check field at all.
    assert!(v.get("oracle_agreement").is_none());
}

#[test]
fn verify_flag_reports_oracle_agreement() {
    let (code, stdout, _) = run(&["classify", "--verify", "x^5 + 2x - 27"]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["oracle_agreement"], true);

    let (code, stdout, _) = run(&["decompose", "--verify", "x^3 + 5x + 6"]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["oracle_agreement"], true);
}

#[test]
fn inconclusive_inputs_exit_two() {
    // A member of the base family that misses the sharpened exponent
    // condition: no verdict, but a reasoned report.
    let (code, stdout, _) = run(&["classify", "x^5 + 2x^3 - 27"]);
    assert_eq!(code, 2);
    let v = json(&stdout);
    assert_eq!(v["verdict"], "NotApplicable");
    assert_eq!(v["membership"]["in_s"], true);
    assert_eq!(v["membership"]["in_s_prime"], false);

    // decompose without the equality has nothing to decompose.
    let (code, stdout, _) = run(&["decompose", "x^5 + 2x - 27"]);
    assert_eq!(code, 2);
    assert_eq!(json(&stdout)["verdict"], "NotApplicable");
}

#[test]
fn parse_errors_exit_one_with_byte_position() {
    let (code, stdout, stderr) = run(&["classify", "2**x"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty(), "errors must not print a report: {stdout}");
    let err = json(&stderr);
    let message = err["error"].as_str().unwrap();
    assert!(message.contains("byte 2"), "missing position: {message}");

    let (code, _, stderr) = run(&["classify", "0"]);
    assert_eq!(code, 1);
    assert!(json(&stderr)["error"].as_str().unwrap().contains("zero"));
}

#[test]
fn decompose_reports_both_parts() {
    let (code, stdout, _) = run(&["decompose", "x^3 + 5x + 6"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["verdict"], "Decomposed");
    assert_eq!(v["f_c"], "x+1");
    assert_eq!(v["f_n"], "x^2-x+6");
}

#[test]
fn trinomial_reports_discriminant_and_exception_class() {
    let (code, stdout, _) = run(&["trinomial", "x^4 + 4x^3 + 27"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["discriminant"], "0");
    assert_eq!(v["separable"], false);
    assert_eq!(v["repeated_root"], "-3");
    assert_eq!(v["exception_class"], "quartic_family");

    let (code, stdout, _) = run(&["trinomial", "--verify", "x^7 + 2x^2 - 27"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["separable"], true);
    assert_eq!(v["oracle_agreement"], true);

    // Four terms are not a trinomial: input error.
    let (code, _, stderr) = run(&["trinomial", "x^4 + x^2 + x + 9"]);
    assert_eq!(code, 1);
    assert!(!stderr.is_empty());
}

#[test]
fn factor_lists_multiplicities_and_flags_irreducibility() {
    let (code, stdout, _) = run(&["factor", "x^4 + 4x^3 + 27"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["irreducible"], false);
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 2);
    assert_eq!(factors[0]["poly"], "x+3");
    assert_eq!(factors[0]["multiplicity"], 2);
    assert_eq!(factors[1]["poly"], "x^2-2x+3");
    assert_eq!(factors[1]["multiplicity"], 1);

    let (code, stdout, _) = run(&["factor", "x^2 + 1"]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["irreducible"], true);
}

#[test]
fn factor_rejects_degrees_beyond_the_cap() {
    let (code, _, stderr) = run(&["factor", "x^40 + x + 1"]);
    assert_eq!(code, 1);
    let message = json(&stderr)["error"].as_str().unwrap().to_owned();
    assert!(message.contains("--max-degree"), "unhelpful message: {message}");
}

#[test]
fn scan_rejects_composite_q_citing_the_counterexample() {
    let (code, stdout, stderr) = run(&["scan", "--q", "4"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    assert!(
        stderr.contains("x^8 + x^6 + x^4 + 4"),
        "rejection must cite the counterexample: {stderr}"
    );
}

#[test]
fn tiny_scan_completes_with_consistent_counts() {
    let (code, stdout, _) = run(&[
        "scan",
        "--q",
        "5",
        "--max-degree",
        "6",
        "--coeff-bound",
        "1",
        "--pp-bound",
        "9",
    ]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["counterexamples"].as_array().map(Vec::len), Some(0));
    assert_eq!(v["tested"], 36);
    assert_eq!(v["oracle_calls"], 9);
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn usage_errors_and_help_use_the_conventional_exit_codes() {
    let (code, _, stderr) = run(&["classify", "--no-such-flag", "x+1"]);
    assert_eq!(code, 1);
    assert!(!stderr.is_empty());

    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("classify"));

    let (code, _, _) = run(&["scan", "--q", "5", "--max-degree", "40"]);
    assert_eq!(code, 1);
}

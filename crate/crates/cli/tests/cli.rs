//! End-to-end checks of the command-line surface: deterministic output,
//! JSON round-trips, documented exit codes.

use std::process::{Command, Output};

fn cliffordlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffordlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = cliffordlab(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn appell_gen_round_trips_through_the_parser() {
    let text = stdout_of(&["appell", "gen", "--n", "3", "--k", "5"]);
    let dto: cliffordlab_core::json::PolynomialDto = serde_json::from_str(&text).unwrap();
    assert_eq!(dto.schema.as_deref(), Some("cliffordlab/v1"));
    let parsed = cliffordlab_core::json::polynomial_from_dto(&dto).unwrap();
    assert_eq!(parsed, cliffordlab_core::appell::appell_polynomial(3, 5).unwrap());
    // re-serialization is the identity on the wire form
    let mut dto2 = cliffordlab_core::json::polynomial_to_dto(&parsed);
    dto2.schema = Some("cliffordlab/v1".into());
    assert_eq!(serde_json::to_string_pretty(&dto2).unwrap() + "\n", text);
}

#[test]
fn appell_gen_k0_is_the_unit() {
    let text = stdout_of(&["appell", "gen", "--n", "3", "--k", "0", "--format", "text"]);
    assert_eq!(text.trim(), "[1]");
}

#[test]
fn reports_are_byte_identical_for_fixed_seed() {
    let args = [
        "verify", "--suite", "appell", "--n", "3", "--max-k", "4", "--trials", "3", "--seed",
        "11",
    ];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    assert!(first.contains("\"failures\": []"));
}

#[test]
fn verify_all_passes_in_the_degenerate_complex_case() {
    let out = cliffordlab(&[
        "verify", "--suite", "all", "--n", "1", "--max-k", "6", "--max-degree", "4", "--trials",
        "5",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"failures\": []"));
}

#[test]
fn eval_exp_on_the_real_axis() {
    let text = stdout_of(&["eval", "--fn", "exp", "--n", "3", "--point", "1,0,0,0"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let value = doc["value"]["terms"][0]["value"].as_f64().unwrap();
    assert!((value - (-2.0 * std::f64::consts::E)).abs() < 1e-10);
    assert!(doc["tail_bound"].as_f64().unwrap() < 1e-10);
}

#[test]
fn eval_sin_at_origin_is_zero() {
    let text = stdout_of(&["eval", "--fn", "sin", "--n", "3", "--point", "0,0,0,0"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["value"]["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn hardy_kernel_closed_form() {
    let text = stdout_of(&[
        "kernel", "eval", "--space", "hardy", "--n", "3", "--x", "0.5,0,0,0", "--y",
        "0.5,0,0,0", "--trunc", "120",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let value = doc["value"]["terms"][0]["value"].as_f64().unwrap();
    assert!((value - 4.0 / 3.0).abs() < 1e-10);
}

#[test]
fn weights_csv_matches_the_table() {
    let text = stdout_of(&[
        "fueter", "weights", "--space", "hardy", "--n", "3", "--upto", "3", "--format", "csv",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,c_k,b_k");
    assert_eq!(lines[1], "0,1,1/4");
    assert_eq!(lines[2], "1,1,1/36");
    assert_eq!(lines[3], "2,1,1/144");
}

#[test]
fn fueter_apply_check_agrees_with_brute_force() {
    let text = stdout_of(&["fueter", "apply", "--n", "3", "--power", "7", "--check"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["check_passed"], serde_json::Value::Bool(true));
}

#[test]
fn fueter_diagram_runs_clean() {
    let text = stdout_of(&[
        "fueter", "diagram", "--n", "3", "--degree", "5", "--seed", "3", "--trials", "5",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["failures"], serde_json::json!(0));
}

#[test]
fn rkhs_and_poly_verify_subcommands() {
    let out = cliffordlab(&[
        "rkhs", "verify", "--suite", "operators", "--n", "3", "--trials", "10", "--seed", "7",
    ]);
    assert!(out.status.success());
    let out = cliffordlab(&[
        "poly", "verify", "--relation", "--n", "3", "--degree", "4", "--seed", "11", "--trials",
        "3",
    ]);
    assert!(out.status.success());
}

#[test]
fn poly_cmap_example() {
    // C(x̄^1 x^2) at n=3 is the constant -4 times x0
    let text = stdout_of(&["poly", "cmap", "--n", "3", "--m", "1", "--k", "1", "--j", "2", "--format", "text"]);
    assert_eq!(text.trim(), "[-4] x0");
}

#[test]
fn usage_errors_exit_with_code_2() {
    // even dimension
    let out = cliffordlab(&["appell", "gen", "--n", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed point
    let out = cliffordlab(&["eval", "--fn", "exp", "--n", "3", "--point", "1,zzz,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    // wrong point length
    let out = cliffordlab(&["eval", "--fn", "exp", "--n", "3", "--point", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown suite
    let out = cliffordlab(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown flag goes through clap's own exit code
    let out = cliffordlab(&["appell", "gen", "--bogus", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // dimension beyond the blade cap
    let out = cliffordlab(&["appell", "gen", "--n", "13", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_tolerance_override_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_cliffordlab"))
        .args(["eval", "--fn", "exp", "--n", "3", "--point", "0,0,0,0"])
        .env("CLIFFORDLAB_TOL", "not-a-float")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_degree_cap_override_is_enforced() {
    // P_9 needs degree 9; a cap of 5 turns generation into a config error
    let out = Command::new(env!("CARGO_BIN_EXE_cliffordlab"))
        .args(["appell", "gen", "--n", "3", "--k", "9"])
        .env("CLIFFORDLAB_DEGREE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree cap"));
    let out = Command::new(env!("CARGO_BIN_EXE_cliffordlab"))
        .args(["appell", "gen", "--n", "3", "--k", "2"])
        .env("CLIFFORDLAB_DEGREE_CAP", "zzz")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

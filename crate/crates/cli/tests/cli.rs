//! CLI contract tests: output shapes, exit codes, JSON hygiene.

use std::process::{Command, Output};

use chisel_cli::reproduce::{compare_poly, expected_tower_4};
use chisel_core::poly::Polynomial;
use chisel_core::rational::rat;

fn chisel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chisel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn ehrhart_chiseled_cube_json_has_exact_linear_coefficient() {
    let out = chisel(&["ehrhart", "q", "--n", "7", "--a", "5", "--b", "2", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["exact"], serde_json::Value::Bool(true));
    let coeffs = value["result"]["polynomial"].as_array().expect("array");
    assert_eq!(coeffs[1], serde_json::Value::String("-11/7".into()));
    assert_eq!(coeffs[0], serde_json::Value::String("1".into()));
}

#[test]
fn alpha_table_text_contains_negative_entries() {
    let out = chisel(&["alpha-table", "--n", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-5/3136"));
    assert!(text.contains("-1/800"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["ehrhart", "b", "--k", "4", "--json"],
        vec!["alpha-scan", "--n", "7", "--json"],
        vec!["mu", "--n", "1", "--k", "6", "--a", "730", "--json"],
        vec!["search", "--n", "0", "--k-max", "5", "--json"],
        vec!["hstar", "--poly", "1,2,1", "--json"],
    ] {
        let out = chisel(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
        // serialize -> parse is the identity
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, again, "{args:?}");
    }
}

#[test]
fn no_floating_point_tokens_in_json_payloads() {
    for args in [
        vec!["ehrhart", "q", "--n", "7", "--a", "5", "--b", "2", "--json"],
        vec!["ehrhart", "p-prod", "--n", "1", "--k", "28", "--a", "498205702352484", "--json"],
        vec!["alpha-table", "--n", "7", "--json"],
        vec!["choose-a", "--n", "1", "--k", "28", "--json"],
        vec!["interp", "--points", "0=1,1=4,2=9", "--json"],
    ] {
        let out = chisel(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        // a digit-dot-digit sequence would indicate a float leaked through
        let has_float = text
            .as_bytes()
            .windows(3)
            .any(|w| w[0].is_ascii_digit() && w[1] == b'.' && w[2].is_ascii_digit());
        assert!(!has_float, "float-like token in output of {args:?}: {text}");
    }
}

#[test]
fn interp_and_hstar_commands() {
    let out = chisel(&["interp", "--points", "0=1,1=4,2=9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("t^2 + 2*t + 1"));

    let out = chisel(&["hstar", "--poly", "1,2,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(1, 1, 0)"));

    // non-integral h* prints a warning but succeeds
    let out = chisel(&["hstar", "--poly", "1,1/2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("not integral"));
}

#[test]
fn usage_errors_exit_two() {
    let out = chisel(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chisel(&["ehrhart", "q", "--badflag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn computation_errors_exit_one() {
    // chiseled cube needs a > 2b
    let out = chisel(&["ehrhart", "q", "--n", "7", "--a", "2", "--b", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error"));

    let out = chisel(&["interp", "--points", "0=1,0=2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = chisel(&["count", "--file", "/nonexistent.poly", "--t", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn count_reads_the_bundled_example_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/example14.poly");
    let out = chisel(&["count", "--file", path, "--t", "1", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["result"]["count"], serde_json::Value::String("23026".into()));
}

#[test]
fn validate_subcommand_reports_structure() {
    let out = chisel(&["validate", "--cube", "3", "--scale", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices 8"));
    assert!(text.contains("smooth: true"));
}

#[test]
fn chisel_subcommand_builds_and_exports() {
    let dir = std::env::temp_dir().join("chisel-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("tower1.poly");
    let out = chisel(&[
        "chisel",
        "--cube",
        "3",
        "--scale",
        "3",
        "--depths",
        "1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices 24"));
    assert!(text.contains("facets 14"));

    // the exported file counts like the original
    let out = chisel(&["count", "--file", out_path.to_str().unwrap(), "--t", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 56"));

    // failing stage is named
    let out = chisel(&["chisel", "--cube", "3", "--scale", "3", "--depths", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("stage 1"));
}

#[test]
fn reproduce_filter_runs_only_matching_items() {
    let out = chisel(&["reproduce", "--only", "b4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[PASS] b4:"));
    assert!(text.contains("[PASS] b4-count:"));
    assert!(!text.contains("q7"));
    assert!(text.contains("2 passed, 0 failed"));

    let out = chisel(&["reproduce", "--only", "no-such-item"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn harness_flags_corrupted_expected_values() {
    // self-test: a deliberately wrong expected value must fail and name the
    // first differing coefficient
    let computed = expected_tower_4();
    let mut corrupted = computed.coeffs().to_vec();
    corrupted[2] += rat(1);
    let corrupted = Polynomial::from_coeffs(corrupted);
    let err = compare_poly("stage-4 tower", &computed, &corrupted).unwrap_err();
    assert!(err.contains("stage-4 tower"), "{err}");
    assert!(err.contains("t^2"), "{err}");
    assert!(err.contains("15363"), "{err}");
}

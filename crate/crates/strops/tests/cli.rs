//! End-to-end checks of the command-line surface: exit codes, byte
//! determinism, the JSON round trip, and the degree-bound override.

use std::process::Command;

fn strops(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_strops"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn intersection_ring_table_for_cp2() {
    let (code, stdout, _) = strops(&["ring", "--space", "cp2", "--kind", "intersection"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[c:-2] / (c^3)"), "{stdout}");
    assert!(stdout.contains("H[-4]: c^2"));
    assert!(stdout.contains("H[+0]: 1"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["ring", "--space", "gr2,5", "--format", "json"],
        vec!["string-ring", "--base", "cp2", "--fiber", "s1", "--window", "-6:2", "--format", "json"],
        vec!["tower", "--group", "s1", "--levels", "3", "--limit", "--window", "-4:1", "--format", "json"],
        vec!["e2", "--base", "s2", "--fiber", "s1", "--tmax", "8", "--format", "json"],
        vec!["tower", "--group", "o2", "--levels", "5", "--format", "table"],
    ] {
        let (c1, out1, _) = strops(&args);
        let (c2, out2, _) = strops(&args);
        assert_eq!(c1, 0, "{args:?}");
        assert_eq!(c1, c2);
        assert_eq!(out1, out2, "nondeterministic output for {args:?}");
        assert!(!out1.is_empty());
    }
}

#[test]
fn json_ring_output_reparses_to_an_equal_presentation() {
    let (code, stdout, _) = strops(&["ring", "--space", "cp2", "--kind", "intersection", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let pres: strops::graded_algebra::RingPresentationJson =
        serde_json::from_value(doc["presentation"].clone()).unwrap();
    let ring = strops::graded_algebra::Ring::from_json(&pres).unwrap();
    let expected = strops::string_product::intersection_ring(
        &strops::manifold_catalog::cpn(2, strops::graded_algebra::Coefficients::Integers).unwrap(),
    )
    .unwrap()
    .ring;
    assert!(ring == expected);
    // shifted and unshifted degrees are both carried
    assert_eq!(doc["entries"][0]["degree"], serde_json::json!(-4));
    assert_eq!(doc["entries"][0]["unshifted_degree"], serde_json::json!(0));
}

#[test]
fn unknown_space_is_a_domain_error() {
    let (code, _, stderr) = strops(&["ring", "--space", "nosuch"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown space"));
}

#[test]
fn parse_failures_exit_64() {
    let (code, _, _) = strops(&["frobnicate"]);
    assert_eq!(code, 64);
    let (code, _, _) = strops(&["ring"]);
    assert_eq!(code, 64);
    let (code, _, _) = strops(&["ring", "--space", "cp2", "--format", "yaml"]);
    assert_eq!(code, 64);
}

#[test]
fn help_is_a_success() {
    let (code, stdout, _) = strops(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("strops"));
}

#[test]
fn verify_passes_on_the_worked_examples() {
    for (base, fiber) in [("cp2", "s1"), ("rp3", "s1"), ("gr2,4", "o2")] {
        let (code, stdout, _) = strops(&["verify", "--base", base, "--fiber", fiber]);
        assert_eq!(code, 0, "{base} x {fiber}: {stdout}");
        assert_eq!(stdout.matches("PASS").count(), 3, "{stdout}");
    }
}

#[test]
fn o2_tower_emits_certificate() {
    let (code, stdout, _) = strops(&["tower", "--group", "o2", "--levels", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["certificate"]["inequivalent"], serde_json::json!(true));
    assert_eq!(doc["certificate"]["witness_levels"], serde_json::json!([4, 6]));
    assert!(doc["levels"].as_array().unwrap().len() == 4);
}

#[test]
fn twisted_square_on_rp2_vanishes() {
    let (code, stdout, _) = strops(&["sq", "--space", "rp2", "--i", "1", "--class", "a", "--twisted"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Sq^1_t(a) = 0"), "{stdout}");
}

#[test]
fn qop_reports_duality_transport() {
    let (code, stdout, _) = strops(&["qop", "--space", "rp3", "--i", "0", "--class", "PD(a)"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Q_0(PD(a)) = PD(a^2)"), "{stdout}");
}

#[test]
fn degree_bound_override_is_visible() {
    let out = Command::new(env!("CARGO_BIN_EXE_strops"))
        .args(["ring", "--space", "rp1", "--format", "json"])
        .env("STROPS_DEGREE_BOUND", "40")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["presentation"]["degree_bound"], serde_json::json!(40));
}

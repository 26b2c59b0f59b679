//! End-to-end tests of the binary: golden outputs, exit-status discipline,
//! and the b-file comparison workflow.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oeis-cli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

#[test]
fn gen_plain_matches_published_shadows() {
    let output = run(&["gen", "A343773", "--terms", "14"]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout(&output),
        "1, 1, 0, -2, -3, 1, 11, 15, -13, -77, -86, 144, 595, 495\n"
    );
}

#[test]
fn gen_plain_inverted_shadows() {
    let output = run(&["gen", "A007440", "--terms", "8", "--format", "plain"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "1, -1, 0, 2, -3, -1, 11, -15\n");
}

#[test]
fn gen_single_term_bfile() {
    let output = run(&["gen", "A001006", "--terms", "1", "--format", "bfile"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "0 1\n");
}

#[test]
fn gen_csv_has_header_and_offset_indices() {
    let output = run(&["gen", "A007440", "--terms", "3", "--format", "csv"]);
    assert_eq!(stdout(&output), "n,a(n)\n1,1\n2,-1\n3,0\n");
}

#[test]
fn gen_json_shape() {
    let output = run(&["gen", "A214649", "--terms", "4", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["id"], "A214649");
    assert_eq!(value["offset"], -1);
    assert_eq!(
        value["terms"],
        serde_json::json!(["1", "-1", "1", "1"])
    );
}

#[test]
fn gen_formats_encode_identical_values() {
    let n = 12;
    let plain = stdout(&run(&["gen", "A039834", "-n", &n.to_string()]));
    let plain_terms: Vec<String> = plain.trim().split(", ").map(str::to_owned).collect();

    let json = stdout(&run(&["gen", "A039834", "-n", &n.to_string(), "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let json_terms: Vec<String> = value["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap().to_owned())
        .collect();

    let bfile = stdout(&run(&["gen", "A039834", "-n", &n.to_string(), "--format", "bfile"]));
    let bfile_terms: Vec<String> = bfile
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap().to_owned())
        .collect();

    let csv = stdout(&run(&["gen", "A039834", "-n", &n.to_string(), "--format", "csv"]));
    let csv_terms: Vec<String> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_owned())
        .collect();

    assert_eq!(plain_terms, json_terms);
    assert_eq!(plain_terms, bfile_terms);
    assert_eq!(plain_terms, csv_terms);
}

#[test]
fn gen_unknown_id_is_a_usage_error() {
    let output = run(&["gen", "A000001", "--terms", "5"]);
    assert_eq!(code(&output), 2);
}

#[test]
fn gen_rejects_zero_terms() {
    let output = run(&["gen", "A001006", "--terms", "0"]);
    assert_eq!(code(&output), 2);
}

#[test]
fn verify_passes_for_every_documented_identity() {
    let identities: &[(&str, &str)] = &[
        ("sum", "40"),
        ("shadow-diff", "40"),
        ("functional-eq-M", "40"),
        ("functional-eq-A", "40"),
        ("functional-eq-B", "40"),
        ("functional-eq-S", "40"),
        ("proposition2", "60"),
        ("inversion", "40"),
        ("reversion-roundtrip", "30"),
        ("chain-commute", "20"),
        ("fibonacci", "50"),
    ];
    for (identity, order) in identities {
        let output = run(&["verify", identity, "--order", order]);
        assert_eq!(code(&output), 0, "{identity}: {}", stdout(&output));
        assert!(stdout(&output).starts_with(&format!("PASS {identity}")));
    }
}

#[test]
fn verify_unknown_identity_is_a_usage_error() {
    let output = run(&["verify", "no-such-identity", "--order", "10"]);
    assert_eq!(code(&output), 2);
}

#[test]
fn compare_matches_all_reference_fixtures() {
    for (id, file) in [
        ("A000045", "b000045.txt"),
        ("A001006", "b001006.txt"),
        ("A007440", "b007440.txt"),
        ("A039834", "b039834.txt"),
        ("A100223", "b100223.txt"),
        ("A107587", "b107587.txt"),
        ("A214649", "b214649.txt"),
        ("A343386", "b343386.txt"),
        ("A343773", "b343773.txt"),
    ] {
        let path = fixture(file);
        let output = run(&["compare", id, path.to_str().unwrap()]);
        assert_eq!(code(&output), 0, "{id}: {}", stdout(&output));
        assert!(stdout(&output).contains("MATCH"), "{id}: {}", stdout(&output));
    }
}

#[test]
fn compare_detects_corrupted_term() {
    let path = fixture("b107587_corrupted.txt");
    let output = run(&["compare", "A107587", path.to_str().unwrap()]);
    assert_eq!(code(&output), 1);
    let report = stdout(&output);
    assert!(report.contains("MISMATCH at n=5"), "{report}");
    assert!(report.contains("b-file has 12, generated 11"), "{report}");
}

#[test]
fn compare_reports_short_reference() {
    let path = fixture("b001006.txt");
    let output = run(&["compare", "A001006", path.to_str().unwrap(), "--terms", "1000"]);
    assert_eq!(code(&output), 0);
    let report = stdout(&output);
    assert!(report.contains("SHORT_REFERENCE"), "{report}");
    assert!(report.contains("14 of 1000"), "{report}");
}

#[test]
fn compare_rejects_malformed_bfiles() {
    let dir = tempfile::tempdir().unwrap();
    for (name, content) in [
        ("gap.txt", "0 1\n2 2\n"),
        ("dup.txt", "0 1\n0 1\n"),
        ("junk.txt", "0 one\n"),
        ("offset.txt", "5 21\n6 51\n"),
    ] {
        let path = dir.path().join(name);
        std::fs::write(&path, content).unwrap();
        let output = run(&["compare", "A001006", path.to_str().unwrap()]);
        assert_eq!(code(&output), 2, "{name}");
    }
    let output = run(&["compare", "A001006", "/no/such/file"]);
    assert_eq!(code(&output), 2);
}

#[test]
fn generated_bfile_round_trips_through_compare() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("generated.txt");
    let output = run(&["gen", "A214649", "--terms", "30", "--format", "bfile"]);
    std::fs::write(&path, stdout(&output)).unwrap();
    let output = run(&["compare", "A214649", path.to_str().unwrap(), "--terms", "30"]);
    assert_eq!(code(&output), 0);
    assert!(stdout(&output).contains("MATCH"));
}

#[test]
fn paths_counts_only() {
    let output = run(&["paths", "4"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "even=3 odd=6 total=9\n");
}

#[test]
fn paths_empty_length() {
    let output = run(&["paths", "0"]);
    assert_eq!(stdout(&output), "even=1 odd=0 total=1\n");
}

#[test]
fn paths_listing_with_parity_filter() {
    let output = run(&["paths", "4", "--list", "--parity", "even"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "even=3 odd=6 total=9\nHHHH\nUDUD\nUUDD\n");

    let output = run(&["paths", "4", "--list"]);
    assert_eq!(
        stdout(&output),
        "even=3 odd=6 total=9\nHHHH\nHHUD\nHUDH\nHUHD\nUDHH\nUDUD\nUHDH\nUHHD\nUUDD\n"
    );
}

#[test]
fn paths_listing_over_cap_is_a_usage_error() {
    let output = run(&["paths", "19", "--list"]);
    assert_eq!(code(&output), 2);
    // Counts alone are fine above the cap.
    let output = run(&["paths", "19"]);
    assert_eq!(code(&output), 0);
}

#[test]
fn reverse_shadow_coefficients() {
    let output = run(&["reverse", "--order", "8", "--", "1", "1", "0", "-2", "-3", "1", "11", "15"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "1 -1 2 -3 5 -8 13 -21\n");
}

#[test]
fn reverse_accepts_one_quoted_argument() {
    let output = run(&["reverse", "--order", "8", "1 1 0 -2 -3 1 11 15"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output), "1 -1 2 -3 5 -8 13 -21\n");
}

#[test]
fn reverse_identity_series() {
    let output = run(&["reverse", "1", "--order", "4"]);
    assert_eq!(stdout(&output), "1 0 0 0\n");
}

#[test]
fn reverse_scales_rationally() {
    let output = run(&["reverse", "2", "--order", "3"]);
    assert_eq!(stdout(&output), "1/2 0 0\n");
}

#[test]
fn reverse_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coeffs.txt");
    std::fs::write(&path, "1 -1 2 -3 5 -8 13 -21\n").unwrap();
    let output = run(&["reverse", "--file", path.to_str().unwrap(), "--order", "8"]);
    assert_eq!(code(&output), 0);
    // Reverting the reverse recovers the shadows.
    assert_eq!(stdout(&output), "1 1 0 -2 -3 1 11 15\n");
}

#[test]
fn reverse_usage_errors() {
    // Zero leading coefficient.
    let output = run(&["reverse", "--order", "4", "--", "0", "1"]);
    assert_eq!(code(&output), 2);
    // Malformed token.
    let output = run(&["reverse", "--order", "4", "1", "two"]);
    assert_eq!(code(&output), 2);
    // No coefficients at all.
    let output = run(&["reverse", "--order", "4"]);
    assert_eq!(code(&output), 2);
}

//! Black-box tests of the geoldpc binary: golden stdout, subcommand piping,
//! file round trips, and the error contract.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_geoldpc"))
}

fn run(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn geoldpc");
    child.stdin.as_mut().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const EG4_PRETTY: &str = "\
# origin: eg(s=2, poly=0x13, base=(14, 1))
# rows=15 n=15 rank=8 k=7
# rho={4} gamma={4} lambda=1
# ones=60 density=0.266667
# d=5 (formula)
# g(x) = 1 + x^4 + x^6 + x^7 + x^8
# h(x) = 1 + x^4 + x^6 + x^7
000000011010001
000000110100010
000001101000100
000011010001000
000110100010000
001101000100000
011010001000000
110100010000000
101000100000001
010001000000011
100010000000110
000100000001101
001000000011010
010000000110100
100000001101000
";

#[test]
fn construct_golden_and_deterministic() {
    let (code, out, err) = run(&["construct", "--geometry", "eg", "--s", "2"], b"");
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out, EG4_PRETTY);
    let (_, again, _) = run(&["construct", "--geometry", "eg", "--s", "2"], b"");
    assert_eq!(out, again);
}

#[test]
fn construct_pipes_into_css() {
    let (c, bundle, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "json",
        ],
        b"",
    );
    assert_eq!(c, 0);
    let (c, out, err) = run(&["css", "--split-rows", "2"], bundle.as_bytes());
    assert_eq!(c, 0, "stderr: {err}");
    assert!(out.contains("# css [[15, 4]]"), "out: {out}");
    assert!(out.contains("# c2 h(x) = 1 + x^3"));
    assert!(out.contains("# c2 dual check polynomial = 1 + x^3 + x^6 + x^9 + x^12"));
}

#[test]
fn pretty_output_pipes_as_bit_rows() {
    // Pretty output drops the origin but keeps the matrix, so chained
    // subcommands still work on it.
    let (c, out, _) = run(&["css", "--split-rows", "2"], EG4_PRETTY.as_bytes());
    assert_eq!(c, 0);
    assert!(out.contains("# css [[15, 4]]"));
}

#[test]
fn transform_puncture_via_files() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("code.json");
    let dst = dir.path().join("punct.json");
    let (c, _, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "json",
            "--out",
            src.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(c, 0);
    let (c, _, err) = run(
        &[
            "transform",
            "--op",
            "puncture",
            "--line",
            "0",
            "--in",
            src.to_str().unwrap(),
            "--format",
            "json",
            "--out",
            dst.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(c, 0, "stderr: {err}");
    let (c, out, _) = run(&["inspect", "--in", dst.to_str().unwrap()], b"");
    assert_eq!(c, 0);
    assert!(out.contains("rows=14 n=11"), "out: {out}");
    assert!(out.contains("rho={3, 4}"));
}

#[test]
fn alist_round_trip_preserves_matrix() {
    let (c, alist, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "alist",
        ],
        b"",
    );
    assert_eq!(c, 0);
    assert!(alist.starts_with("15 15\n4 4\n"));
    let (c, back, _) = run(&["export", "--format", "alist"], alist.as_bytes());
    assert_eq!(c, 0);
    assert_eq!(alist, back);
    // And the matrix itself survives: re-export as pretty and compare rows.
    let (c, pretty, _) = run(&["export", "--format", "pretty"], alist.as_bytes());
    assert_eq!(c, 0);
    let rows: Vec<&str> = pretty.lines().filter(|l| !l.starts_with('#')).collect();
    let expect: Vec<&str> = EG4_PRETTY.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, expect);
}

#[test]
fn json_bundle_round_trip_preserves_origin() {
    let (c, bundle, _) = run(
        &[
            "construct",
            "--geometry",
            "pg",
            "--s",
            "2",
            "--format",
            "json",
        ],
        b"",
    );
    assert_eq!(c, 0);
    let (c, again, _) = run(&["export", "--format", "json"], bundle.as_bytes());
    assert_eq!(c, 0);
    assert_eq!(bundle, again);
    assert!(bundle.contains("\"kind\": \"pg\""));
}

#[test]
fn check_ldpc_flags_overlap_violation() {
    let (c, _, err) = run(&["inspect", "--check-ldpc"], b"110\n110\n110\n");
    assert_eq!(c, 1);
    assert!(err.contains("error[ldpc_check]"), "stderr: {err}");
    assert!(err.contains("lambda=3"));

    let (c, _, err) = run(&["inspect", "--check-ldpc"], EG4_PRETTY.as_bytes());
    assert_eq!(c, 0, "regular matrix should pass: {err}");
}

#[test]
fn errors_carry_category_and_exit_code() {
    let (c, bundle, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "json",
        ],
        b"",
    );
    assert_eq!(c, 0);
    let (c, _, err) = run(&["css", "--split-rows", "1"], bundle.as_bytes());
    assert_eq!(c, 1);
    assert!(err.starts_with("error[bad_split_factor]"), "stderr: {err}");

    let (c, _, err) = run(&["decode", "--word", "101"], bundle.as_bytes());
    assert_eq!(c, 1);
    assert!(err.starts_with("error[length_mismatch]"), "stderr: {err}");

    let (c, _, err) = run(&["simulate", "--trials", "10"], bundle.as_bytes());
    assert_eq!(c, 1);
    assert!(err.starts_with("error[parse]"), "stderr: {err}");
}

#[test]
fn decode_fixes_single_error() {
    let (_, bundle, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "json",
        ],
        b"",
    );
    // Flip the last bit of the all-zero codeword.
    let (c, out, err) = run(&["decode", "--word", "000000000000001"], bundle.as_bytes());
    assert_eq!(c, 0, "stderr: {err}");
    assert!(out.contains("success: true"));
    assert!(out.contains("iterations: 1"));
    assert!(out.contains("word: 000000000000000"));
}

#[test]
fn simulate_json_is_deterministic() {
    let (_, bundle, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "json",
        ],
        b"",
    );
    let args = [
        "simulate", "--p", "0.05", "--trials", "400", "--seed", "3", "--format", "json",
    ];
    let (c, a, err) = run(&args, bundle.as_bytes());
    assert_eq!(c, 0, "stderr: {err}");
    let (_, b, _) = run(&args, bundle.as_bytes());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["trials"], 400);
    assert_eq!(v["block_length"], 15);
    assert_eq!(v["seed"], 3);
    assert!(v["ber"].is_number());
}

#[test]
fn simulate_css_uses_both_channels() {
    let (_, bundle, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "json",
        ],
        b"",
    );
    let (c, css, _) = run(
        &["css", "--split-rows", "2", "--format", "json"],
        bundle.as_bytes(),
    );
    assert_eq!(c, 0);
    let (c, out, err) = run(
        &[
            "simulate", "--px", "0.01", "--pz", "0.02", "--trials", "300", "--seed", "8",
            "--format", "json",
        ],
        css.as_bytes(),
    );
    assert_eq!(c, 0, "stderr: {err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["x_failures"].is_number());
    assert!(v["z_failures"].is_number());
    assert_eq!(v["decode_calls"], 600);
}

#[test]
fn inspect_json_reports_cyclic_polynomials() {
    let (_, bundle, _) = run(
        &[
            "construct",
            "--geometry",
            "eg",
            "--s",
            "2",
            "--format",
            "json",
        ],
        b"",
    );
    let (c, out, _) = run(&["inspect", "--format", "json"], bundle.as_bytes());
    assert_eq!(c, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 15);
    assert_eq!(v["k"], 7);
    assert_eq!(v["origin"]["kind"], "eg");
    assert_eq!(v["cyclic"]["g"], serde_json::json!([0, 4, 6, 7, 8]));
    assert_eq!(v["cyclic"]["h"], serde_json::json!([0, 4, 6, 7]));
    assert_eq!(v["d_known"]["value"], 5);
}

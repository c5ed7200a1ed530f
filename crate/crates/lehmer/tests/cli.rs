use std::process::Command;

use clap::Parser;
use lehmer::json::{poly_from_json, poly_to_json};
use lehmer::{run, Cli, Status};
use lehmer_core::{Monomial, Poly2};
use proptest::prelude::*;

fn lehmer(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lehmer"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn det_three_text() {
    let (code, out, err) = lehmer(&["det", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 - z - q*z\n");
    assert!(err.is_empty());
}

#[test]
fn verify_passes_and_exits_zero() {
    let (code, out, _) = lehmer(&["verify", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["det", "0"][..],
        &["matrix", "0"],
        &["verify", "x"],
        &["frobnicate"],
        &["stabilize", "3", "2"],
        &["limit", "--zdeg", "2"],
        &["qbinom", "3"],
    ] {
        let (code, out, err) = lehmer(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn qbinom_accepts_negative_k() {
    assert_eq!(lehmer(&["qbinom", "3", "-1"]).1, "0\n");
    assert_eq!(
        lehmer(&["qbinom", "4", "2"]).1,
        "1 + q + 2*q^2 + q^3 + q^4\n"
    );
}

#[test]
fn matrix_uses_uv_with_header() {
    let (_, out, _) = lehmer(&["matrix", "3"]);
    assert_eq!(
        out,
        "# variables: u = q^(1/2), v = z^(1/2)\ndiag: 1, 1, 1\nsuper: v, v*u\nsub: v, v*u\n"
    );
}

#[test]
fn limit_prints_one_line_per_power() {
    let (_, out, _) = lehmer(&["limit", "--zdeg", "2", "--qdeg", "4"]);
    assert_eq!(
        out,
        "z^0: 1\nz^1: -1 - q - q^2 - q^3 - q^4\nz^2: q^2 + q^3 + 2*q^4\n"
    );
}

#[test]
fn small_commands() {
    assert_eq!(lehmer(&["stabilize", "6", "1"]).1, "4\n");
    assert_eq!(lehmer(&["stabilize", "6", "0"]).1, "all\n");
    assert_eq!(lehmer(&["dyck", "3", "2"]).1, "4\n");
    assert_eq!(
        lehmer(&["lambda", "4"]).1,
        "1 - z - q*z - q^2*z + q^2*z^2\n"
    );
    assert_eq!(
        lehmer(&["--json", "dyck", "3", "1"]).1,
        "{\"count\":\"1\",\"h\":1,\"m\":3}\n"
    );
}

#[test]
fn json_output_roundtrips_to_text() {
    for (verb, arg) in [("lambda", "9"), ("det", "7"), ("qbinom", "8")] {
        let mut args = vec![verb, arg];
        if verb == "qbinom" {
            args.push("3");
        }
        let text = lehmer(&args).1;
        args.push("--json");
        let json_out = lehmer(&args).1;
        let value: serde_json::Value = serde_json::from_str(&json_out).unwrap();
        let p = poly_from_json(&value).unwrap();
        assert_eq!(format!("{p}\n"), text, "{verb} {arg}");
    }
}

#[test]
fn matrix_json_roundtrips_entries() {
    let value: serde_json::Value =
        serde_json::from_str(&lehmer(&["matrix", "4", "--json"]).1).unwrap();
    let sup: Vec<Poly2> = value["super"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| poly_from_json(v).unwrap())
        .collect();
    let expected = lehmer_core::lehmer_matrix(4).unwrap();
    assert_eq!(sup, expected.superdiag());
    assert_eq!(value["n"], 4);
}

#[test]
fn run_reports_failed_verification_status() {
    let cli = Cli::try_parse_from(["lehmer", "verify", "3"]).unwrap();
    assert_eq!(run(&cli).unwrap().status, Status::Success);
    assert_eq!(Status::VerificationFailed.exit_code(), 1);
}

fn poly_strategy() -> impl Strategy<Value = Poly2> {
    prop::collection::vec(
        (
            0u32..=9,
            0u32..=9,
            -1_000_000_000_000i64..=1_000_000_000_000,
        ),
        0..8,
    )
    .prop_map(|ts| Poly2::from_terms(ts.into_iter().map(|(eu, ev, c)| (Monomial::new(eu, ev), c))))
}

proptest! {
    #[test]
    fn poly_json_roundtrip(p in poly_strategy()) {
        let back = poly_from_json(&poly_to_json(&p)).unwrap();
        prop_assert_eq!(back.to_string(), p.to_string());
        prop_assert_eq!(back, p);
    }
}

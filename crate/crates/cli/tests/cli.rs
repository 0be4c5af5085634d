use std::process::Command;

use hopf_forge::pbw::{random_element, Algebra, AlgebraKind, Element, Letter, Monomial};
use hopf_forge::qfield::{Field, Scalar};
use hopf_forge_cli::{parse, parse_scalar, run, Output};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    run(std::iter::once("hopf-forge").chain(args.iter().copied()))
}

fn error_of(out: &Output) -> Value {
    assert!(out.stdout.is_empty(), "partial output: {}", out.stdout);
    let v: Value = serde_json::from_str(out.stderr.trim()).expect("stderr is JSON");
    v["error"].clone()
}

fn round_trip(kind: AlgebraKind, field: &Field, seed: u64) {
    let alg = Algebra::get(kind, field).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let x = random_element(&alg, &mut rng, 4, 5);
        let text = x.to_string();
        assert_eq!(parse(&text, &alg).unwrap(), x, "{text}");
    }
}

#[test]
fn render_then_parse_is_identity() {
    round_trip(AlgebraKind::U, &Field::generic(), 1);
    let r = Field::root_of_unity(3).unwrap();
    round_trip(AlgebraKind::Small, &r, 2);
    round_trip(AlgebraKind::Double, &r, 3);
    round_trip(AlgebraKind::Small1, &r, 4);
}

#[test]
fn normal_form_of_e2_e1() {
    let out = cli(&["nf", "--algebra", "U", "E2*E1"]);
    assert_eq!(out.code, 0);
    let g = Field::generic();
    let u = Algebra::get(AlgebraKind::U, &g).unwrap();
    let e1e2 = Element::monomial(&u, Monomial::from_parts([0; 3], [0, 0], [0, 0], [1, 0, 1]));
    let e12 = Element::letter(&u, Letter::E12).unwrap();
    let want = e1e2.sub(&e12).scale(&g.q());
    assert_eq!(parse(out.stdout.trim(), &u).unwrap(), want);
}

#[test]
fn pairing_of_e1_f1_at_three() {
    let out = cli(&["pair", "--l", "3", "E1", "F1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let r = Field::root_of_unity(3).unwrap();
    let u = Algebra::get(AlgebraKind::Small, &r).unwrap();
    let want = r.q().mul(&r.q()).sub(&r.one()).inv().unwrap();
    assert_eq!(parse_scalar(out.stdout.trim(), &u).unwrap(), want);
    let js = cli(&["--format", "json", "pair", "--l", "3", "E1", "F1"]);
    let v: Value = serde_json::from_str(&js.stdout).unwrap();
    assert_eq!(Scalar::from_json(&v["scalar"]).unwrap(), want);
}

#[test]
fn decompose_u1_report() {
    let out = cli(&["idem", "decompose-u1", "--l", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("1 = sum of 6 orthogonal idempotents"));
    assert_eq!(out.stdout.matches("primitive yes").count(), 6);
    assert!(out.stdout.contains("verified yes"));
}

#[test]
fn solve_then_verify() {
    let out = cli(&["--l", "3", "--format", "json", "idem", "solve", "--i", "2"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let sols = v["solutions"].to_string();
    let check = cli(&["--l", "3", "idem", "verify", &sols]);
    assert_eq!(check.code, 0, "{}", check.stderr);
    assert_eq!(check.stdout.lines().count(), 4);
    let mut wrong = v["solutions"][0].clone();
    wrong["coeffs"][2] = wrong["coeffs"][1].clone();
    wrong["coeffs"][1] = wrong["coeffs"][0].clone();
    let bad = cli(&["--l", "3", "idem", "verify", &wrong.to_string()]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.contains("idempotent no"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = cli(&["nf", "--frobnicate", "E1"]);
    assert_eq!(out.code, 2);
    assert_eq!(error_of(&out)["kind"], "usage");
}

#[test]
fn malformed_json_is_reported() {
    let out = cli(&["--l", "3", "idem", "verify", "{\"i\": 0, \"coeffs\": [1,"]);
    assert_eq!(out.code, 3);
    let e = error_of(&out);
    assert_eq!(e["kind"], "json");
    assert_eq!(e["line"], 1);
    let out = cli(&["--l", "3", "hwv", "{\"kind\": 3}"]);
    assert_eq!(error_of(&out)["kind"], "json");
}

#[test]
fn syntax_errors_carry_positions() {
    let out = cli(&["nf", "E1 * (F1 + "]);
    assert_eq!(out.code, 3);
    let e = error_of(&out);
    assert_eq!((e["kind"].as_str(), e["line"].as_u64(), e["column"].as_u64()), (Some("syntax"), Some(1), Some(12)));
    let out = cli(&["--l", "3", "nf", "--algebra", "uGeq0", "E1*F1"]);
    assert_eq!(error_of(&out)["kind"], "illegal-generator");
    let out = cli(&["nf", "E1^100000"]);
    assert_eq!(error_of(&out)["kind"], "exponent-overflow");
}

#[test]
fn mode_flags_must_agree() {
    assert_eq!(cli(&["--mode", "generic", "--l", "3", "nf", "1"]).code, 2);
    assert_eq!(cli(&["--mode", "root", "nf", "1"]).code, 2);
    assert_eq!(cli(&["--mode", "root", "--l", "5", "nf", "--algebra", "u", "E1^5"]).stdout, "0\n");
}

#[test]
fn cap_applies_to_solver() {
    let out = cli(&["--l", "9", "idem", "solve", "--i", "0"]);
    assert_eq!(error_of(&out)["kind"], "cap");
}

#[test]
fn repeated_runs_are_identical() {
    let cases: &[&[&str]] = &[
        &["delta", "E12*F1 + K2^-1"],
        &["--l", "3", "--format", "json", "idem", "decompose-u1"],
        &["--l", "3", "double-mul", "E1*E2 | F1", "K1 | F12"],
        &["--l", "3", "tensor", "V(1,0)", "V(0,1)"],
        &["cg", "--lambda1", "q^2", "--lambda2", "3", "--mu1", "-q", "--mu2", "1/2"],
        &["--seed", "9", "selftest"],
    ];
    for args in cases {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a, b, "{args:?}");
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
    }
}

#[test]
fn binary_exit_status_and_streams() {
    let bin = env!("CARGO_BIN_EXE_hopf-forge");
    let ok = Command::new(bin).args(["mul", "K1", "K1^-1"]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "1\n");
    let bad = Command::new(bin).args(["--format", "yaml", "nf", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    let e: Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(e["error"]["kind"], "usage");
}

#[test]
fn module_commands() {
    let out = cli(&["--l", "3", "--format", "json", "simple", "V(2,1)"]);
    assert_eq!(out.code, 0);
    let m = cli(&["--l", "3", "hwv", out.stdout.trim()]);
    assert!(m.stdout.starts_with("weight"), "{}", m.stdout);
    assert_eq!(m.stdout.lines().count(), 2);
    let p = cli(&["--l", "3", "pullback", "--z", "2,1", "V(2,1)"]);
    assert_eq!(p.code, 0);
    assert!(p.stdout.ends_with("twist check: yes\n"));
    let c = cli(&["--l", "5", "congruence", "--m1", "1", "--m2", "0"]);
    assert!(c.stdout.starts_with("(t2, t3) = (1, 2) mod 5"), "{}", c.stdout);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalars_round_trip(num in -50i64..50, den in 1i64..20, e in -6i64..6) {
        let g = Field::generic();
        let u = Algebra::get(AlgebraKind::U, &g).unwrap();
        let s = g.int(num).div(&g.int(den)).unwrap().mul(&g.q_pow(e)).add(&g.q());
        prop_assert_eq!(parse_scalar(&s.to_string(), &u).unwrap(), s);
    }

    #[test]
    fn text_matches_parse_of_text(seed in 0u64..10_000) {
        let r = Field::root_of_unity(5).unwrap();
        let alg = Algebra::get(AlgebraKind::Small, &r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&alg, &mut rng, 3, 3);
        let out = cli(&["--l", "5", "nf", "--algebra", "u", &x.to_string()]);
        prop_assert_eq!(out.stdout, format!("{x}\n"));
    }
}

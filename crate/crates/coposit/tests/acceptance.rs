//! End-to-end CLI checks, including the generate → check → certify → verify
//! round trip (acceptance criterion 10). Exit-code contract: 0 copositive /
//! valid, 1 not copositive / invalid, 2 usage or parse error, 3 certificate
//! requested for a copositive matrix.

use std::path::Path;
use std::process::{Command, Output};

fn coposit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coposit"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary launches")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) {
    std::fs::write(dir.join(name), content).unwrap();
}

#[test]
fn criterion_10_cli_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();

    let gen = coposit(dir, &["gen", "remark-b", "--k", "3", "-o", "m.txt"]);
    assert_eq!(gen.status.code(), Some(0), "gen failed: {gen:?}");
    let file = std::fs::read_to_string(dir.join("m.txt")).unwrap();
    assert!(
        file.contains("256") && file.contains("-32"),
        "unexpected instance: {file}"
    );

    let check = coposit(dir, &["check", "m.txt"]);
    assert_eq!(check.status.code(), Some(1), "check: {check:?}");
    let check_out = stdout(&check);
    assert!(check_out.contains("verdict: not-copositive"));
    assert!(check_out.contains("gamma: -1/1"));

    let certify = coposit(
        dir,
        &[
            "certify",
            "m.txt",
            "--scheme",
            "fixed",
            "--cert-out",
            "y.txt",
        ],
    );
    assert_eq!(certify.status.code(), Some(1), "certify: {certify:?}");
    let certify_out = stdout(&certify);
    assert!(certify_out.contains("bound-fixed[17*L^(3/2)]: satisfied"));
    assert!(certify_out.contains("bound-dyadic[10*L^(3/2)]: satisfied"));

    let verify = coposit(dir, &["verify", "m.txt", "y.txt"]);
    assert_eq!(verify.status.code(), Some(0), "verify: {verify:?}");
    let verify_out = stdout(&verify);
    assert!(verify_out.contains("verdict: valid"));
    // the exported certificate must evaluate strictly negative
    assert!(verify_out.contains("value: -"));

    println!("acceptance criterion 10 (cli round-trip): PASS");
}

#[test]
fn check_copositive_matrix_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "hollow.txt", "2\n0 1\n1 0\n");
    let out = coposit(dir.path(), &["check", "hollow.txt"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict: copositive"));
    assert!(text.contains("gamma: 0/1"));
}

#[test]
fn check_negative_instance_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.txt", "2\n1 -2\n-2 1\n");
    let out = coposit(dir.path(), &["check", "m.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("gamma: -2/1"));
}

#[test]
fn check_supports_oracle_method_and_paranoid_mode() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.txt", "2\n16 -8\n-8 3\n");
    let oracle = coposit(dir.path(), &["check", "m.txt", "--method", "oracle"]);
    assert_eq!(oracle.status.code(), Some(1));
    assert!(stdout(&oracle).contains("method: oracle"));
    let paranoid = coposit(dir.path(), &["check", "m.txt", "--paranoid"]);
    assert_eq!(paranoid.status.code(), Some(1));
    assert!(stdout(&paranoid).contains("gamma: -1/1"));
}

#[test]
fn malformed_and_asymmetric_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "garbage.txt", "not a matrix\n");
    assert_eq!(
        coposit(dir.path(), &["check", "garbage.txt"]).status.code(),
        Some(2)
    );
    write(dir.path(), "skew.txt", "2\n1 2\n3 1\n");
    assert_eq!(
        coposit(dir.path(), &["check", "skew.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(
        coposit(dir.path(), &["check", "missing.txt"]).status.code(),
        Some(2)
    );
}

#[test]
fn upper_triangle_form_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "upper.txt", "# triangle form\n2\n16 -8\n3\n");
    let out = coposit(dir.path(), &["check", "upper.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("gamma: -1/1"));
}

#[test]
fn max_n_guard_is_adjustable() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.txt", "3\n2 1 0\n1 3 1\n0 1 4\n");
    assert_eq!(
        coposit(dir.path(), &["check", "m.txt", "--max-n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coposit(dir.path(), &["check", "m.txt", "--max-n", "3"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn certify_copositive_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "hollow.txt", "2\n0 1\n1 0\n");
    assert_eq!(
        coposit(dir.path(), &["certify", "hollow.txt"])
            .status
            .code(),
        Some(3)
    );
    write(dir.path(), "zero.txt", "1\n0\n");
    assert_eq!(
        coposit(dir.path(), &["certify", "zero.txt"]).status.code(),
        Some(3)
    );
}

#[test]
fn certify_reports_exact_adversarial_certificate() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.txt", "2\n16 -8\n-8 3\n");
    let out = coposit(dir.path(), &["certify", "m.txt", "--scheme", "fixed"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("certificate: 67108864/1 134217728/1"));
    assert!(text.contains("measured-bits: 75"));
    assert!(text.contains("scheme: fixed-denominator"));
    let dyadic = coposit(dir.path(), &["certify", "m.txt", "--scheme", "dyadic"]);
    assert_eq!(dyadic.status.code(), Some(1));
    assert!(stdout(&dyadic).contains("scheme: dyadic"));
}

#[test]
fn verify_examples_from_the_adversarial_instance() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.txt", "2\n16 -8\n-8 3\n");

    write(dir.path(), "good.txt", "1\n2\n");
    let good = coposit(dir.path(), &["verify", "m.txt", "good.txt"]);
    assert_eq!(good.status.code(), Some(0));
    assert!(stdout(&good).contains("value: -4/1"));

    write(dir.path(), "axis.txt", "1\n0\n");
    let axis = coposit(dir.path(), &["verify", "m.txt", "axis.txt"]);
    assert_eq!(axis.status.code(), Some(1));
    assert!(stdout(&axis).contains("value: 16/1"));

    write(dir.path(), "negative.txt", "-1\n1\n");
    let negative = coposit(dir.path(), &["verify", "m.txt", "negative.txt"]);
    assert_eq!(negative.status.code(), Some(1));
    assert!(stdout(&negative).contains("negative"));

    write(dir.path(), "short.txt", "1\n");
    assert_eq!(
        coposit(dir.path(), &["verify", "m.txt", "short.txt"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_families_and_determinism() {
    let dir = tempfile::tempdir().unwrap();

    let k2 = coposit(dir.path(), &["gen", "remark-b", "--k", "2"]);
    assert_eq!(k2.status.code(), Some(0));
    assert_eq!(stdout(&k2), "2\n64 -16\n-16 3\n");

    let embedded = coposit(dir.path(), &["gen", "embed", "--k", "1", "--n", "4"]);
    assert_eq!(embedded.status.code(), Some(0));
    let text = stdout(&embedded);
    assert!(text.starts_with("4\n16 -8 0 0\n"));

    let args = [
        "gen", "random", "--kind", "psd", "--n", "3", "--seed", "7", "-o", "r.txt",
    ];
    coposit(dir.path(), &args);
    let first = std::fs::read_to_string(dir.path().join("r.txt")).unwrap();
    coposit(dir.path(), &args);
    let second = std::fs::read_to_string(dir.path().join("r.txt")).unwrap();
    assert_eq!(first, second);
    // a Gram matrix checks out as copositive
    assert_eq!(
        coposit(dir.path(), &["check", "r.txt"]).status.code(),
        Some(0)
    );

    assert_eq!(
        coposit(dir.path(), &["gen", "remark-b", "--k", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coposit(dir.path(), &["gen", "embed", "--k", "1", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_audit_reports_both_encoding_totals() {
    let dir = tempfile::tempdir().unwrap();
    let out = coposit(
        dir.path(),
        &["gen", "remark-b", "--k", "1", "-o", "m.txt", "--audit"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("strict-encoding-bits: 14"));
    assert!(text.contains("nominal-encoding-bits: 13"));
}

#[test]
fn json_report_is_exact_and_parseable() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.txt", "2\n16 -8\n-8 3\n");
    let out = coposit(dir.path(), &["certify", "m.txt", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["verdict"], "not-copositive");
    assert_eq!(value["gamma"], "-1/1");
    assert_eq!(value["L"], 14);
    assert_eq!(value["measured_bits"], 75);
    assert_eq!(value["bound_fixed_ok"], true);
    assert_eq!(value["bound_dyadic_ok"], true);
    // exact quantities travel as strings, never floats
    assert!(value["gamma"].is_string());
    assert!(value["certificate"][0].is_string());
    assert!(value["d"].is_string());
}

#[test]
fn check_and_certify_verdicts_agree() {
    let dir = tempfile::tempdir().unwrap();
    for (name, content) in [
        ("a.txt", "2\n0 1\n1 0\n"),
        ("b.txt", "2\n1 -2\n-2 1\n"),
        ("c.txt", "1\n-1\n"),
        ("d.txt", "3\n2 1 0\n1 3 1\n0 1 4\n"),
    ] {
        write(dir.path(), name, content);
        let check = coposit(dir.path(), &["check", name]).status.code().unwrap();
        let certify = coposit(dir.path(), &["certify", name])
            .status
            .code()
            .unwrap();
        match check {
            0 => assert_eq!(
                certify, 3,
                "{name}: copositive input must refuse a certificate"
            ),
            1 => assert_eq!(
                certify, 1,
                "{name}: both commands must flag non-copositivity"
            ),
            other => panic!("{name}: unexpected check exit {other}"),
        }
    }
}

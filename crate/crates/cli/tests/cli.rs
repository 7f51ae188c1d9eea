use std::path::PathBuf;
use std::process::{Command, Output};

use legdga::charalg::relations::M10_139_WITNESS;
use legdga::dga::appendix_m10_161;
use legdga::freealg::parse_indexed;
use legdga::report::{RunReport, Verdict};

fn legdga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legdga")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn dga_prints_the_z2_table() {
    let out = legdga(&["dga", "--knot", "m10_161", "--ring", "z2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 40);
    let table = appendix_m10_161();
    for (g, line) in table.generators().zip(&lines) {
        let (lhs, rhs) = line.split_once(" = ").unwrap();
        assert_eq!(lhs, format!("d x_{}", g.label()));
        assert_eq!(&parse_indexed(rhs).unwrap().to_z2(), table.diff(g), "{line}");
    }
    assert!(String::from_utf8_lossy(&out.stderr).contains("40/40"));
}

#[test]
fn laurent_dga_needs_no_table() {
    let out = legdga(&["dga", "--knot", "m10_139", "--ring", "laurent"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 45);
    assert!(text.lines().last().unwrap().ends_with("t^-1"));
}

#[test]
fn witness_verify_exit_codes() {
    let out = legdga(&["witness", "verify", "--knot", "m10_139", "--ring", "laurent", "--element", M10_139_WITNESS]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("verified\n"));

    let out = legdga(&["witness", "verify", "--knot", "m10_139", "--ring", "laurent", "--element", "x_43"]);
    assert_eq!(out.status.code(), Some(1));

    let out = legdga(&["witness", "verify", "--knot", "m10_139", "--element", "x_99"]);
    assert_eq!(out.status.code(), Some(3));
    let out = legdga(&["witness", "verify", "--knot", "m10_139", "--element", "x_1 +"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn witness_report_embeds_the_element() {
    let path = tmp("witness.json");
    let out = legdga(&[
        "witness",
        "verify",
        "--knot",
        "m10_139",
        "--ring",
        "laurent",
        "--element",
        M10_139_WITNESS,
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = RunReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.knot, "m10_139");
    assert_eq!(report.generator_count, 45);
    match report.verdict {
        Some(Verdict::Trivial { witness, ring }) => {
            assert_eq!(ring, "Z[t,t^-1]");
            assert_eq!(parse_indexed(&witness).unwrap(), parse_indexed(M10_139_WITNESS).unwrap());
        }
        other => panic!("{other:?}"),
    }
    assert!(report.timings_ms.contains_key("verify"));
}

#[test]
fn witness_search_distinguishes_unknown() {
    let out = legdga(&["witness", "search", "--knot", "m10_139"]);
    assert_eq!(out.status.code(), Some(0));
    let out = legdga(&["witness", "search", "--knot", "m10_161", "--cap", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("unknown at cap 8"));
}

#[test]
fn certify_m10_161() {
    let path = tmp("cert.json");
    let out = legdga(&["certify", "--knot", "m10_161", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"type\": \"representation\""));
    let report = RunReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    match report.verdict {
        Some(Verdict::NontrivialCertified { certificate }) => assert_eq!(certificate.assignment["x_29"], "d + 1"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn certify_by_augmentation() {
    let out = legdga(&["certify", "--knot", "unknot"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"type\": \"augmentation\""));
    let out = legdga(&["certify", "--knot", "m10_139", "--method", "augmentation"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn charalg_with_the_auxiliary_ideal() {
    let out = legdga(&["charalg", "--knot", "m10_161", "--builtin-ideal"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("forced zeros: x_1, x_3, x_4, x_7, x_9, x_14, x_16, x_25"));
    assert!(text.contains("generators: x_2, x_11, x_12, x_13, x_27, x_29"));
    let out = legdga(&["charalg", "--knot", "m10_139", "--builtin-ideal"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn d2check_and_invariants() {
    for (knot, ring) in [("m10_161", "z2"), ("m10_139", "laurent"), ("m10_139", "z2")] {
        let out = legdga(&["d2check", "--knot", knot, "--ring", ring]);
        assert_eq!(out.status.code(), Some(0), "{knot} {ring}");
    }
    let out = legdga(&["invariants", "--knot", "m10_161"]);
    let text = stdout(&out);
    assert!(text.contains("tb: 4\n") && text.contains("r: -1 "), "{text}");
    let out = legdga(&["d2check", "--knot", "m10_161", "--table", "--ring", "laurent"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn knot_files() {
    let good = tmp("trefoil.json");
    std::fs::write(&good, r#"{"name": "trefoil", "strands": 4, "word": [2, 2, 2]}"#).unwrap();
    let out = legdga(&["invariants", "--file", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("tb: 1\n"));

    let bad = tmp("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "strands": 4, "word": [4]}"#).unwrap();
    assert_eq!(legdga(&["dga", "--file", bad.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(legdga(&["dga", "--file", "/nonexistent.json"]).status.code(), Some(3));
}

#[test]
fn input_errors() {
    assert_eq!(legdga(&["dga", "--knot", "m10_145"]).status.code(), Some(3));
    assert_eq!(legdga(&["dga"]).status.code(), Some(3));
    assert_eq!(legdga(&["dga", "--knot", "m10_161", "--basepoint", "middle"]).status.code(), Some(3));
    assert_eq!(legdga(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(legdga(&["--help"]).status.code(), Some(0));
}

#[test]
fn suite_is_deterministic() {
    let a = legdga(&["paper-suite", "--random-plats", "20"]);
    let b = legdga(&["paper-suite", "--random-plats", "20"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).lines().filter(|l| l.starts_with("PASS")).count(), 13);
}

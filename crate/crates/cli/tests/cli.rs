use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// Runs the binary; returns the exit code and the parsed report.
fn whsg(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_whsg")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8 output");
    let report: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    for key in ["answer", "witnesses", "reason", "elapsed_ms"] {
        assert!(report.get(key).is_some(), "missing {key} in {text}");
    }
    (out.status.code().expect("exit code"), report)
}

#[test]
fn worked_examples() {
    let (code, r) = whsg(&["is-monoid", &fixture("rees.whs")]);
    assert_eq!(code, 0);
    assert_eq!(r["answer"], "yes");
    assert_eq!(r["witnesses"]["identity"], serde_json::json!(["i"]));

    let (_, r) = whsg(&["word-eq", &fixture("null3.whs"), "bc", "cb"]);
    assert_eq!(r["answer"], "true");

    let (_, r) = whsg(&["is-free", &fixture("free2.whs")]);
    assert_eq!(r["answer"], "yes");
}

#[test]
fn arithmetic_commands() {
    let (_, r) = whsg(&["multiply", &fixture("free2.whs"), "ab", "a"]);
    assert_eq!(r["witnesses"]["product"], serde_json::json!(["a", "b", "a"]));
    let (_, r) = whsg(&["represent", &fixture("null3.whs"), "bcb"]);
    assert_eq!(r["witnesses"]["representative"], serde_json::json!(["a"]));
    let (_, r) = whsg(&["word-eq", "--structure", &fixture("z2.whs"), "ggg", "g"]);
    assert_eq!(r["answer"], "true");
    let (_, r) = whsg(&["word-eq", &fixture("null3.whs"), "b", "c"]);
    assert_eq!(r["answer"], "false");
}

#[test]
fn decision_commands() {
    let cases = [
        (vec!["is-group", "z2.whs"], "yes"),
        (vec!["is-group", "rees.whs"], "no"),
        (vec!["is-commutative", "free2.whs"], "no"),
        (vec!["is-commutative", "null3.whs"], "yes"),
        (vec!["is-completely-simple", "rb22.whs"], "yes"),
        (vec!["is-completely-simple", "sl2.whs"], "no"),
        (vec!["is-clifford", "sl2.whs"], "yes"),
        (vec!["is-clifford", "null3.whs"], "no"),
        (vec!["is-free", "free2c.whs"], "yes"),
        (vec!["is-free", "null3.whs"], "no"),
        (vec!["validate", "rees.whs"], "yes"),
    ];
    for (args, want) in cases {
        let path = fixture(args[1]);
        let (code, r) = whsg(&[args[0], &path]);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(r["answer"], want, "{args:?}: {}", r["reason"]);
    }
    let (_, r) = whsg(&["green", "--rel", "R", &fixture("rees.whs"), "b", "c"]);
    assert_eq!(r["answer"], "true");
    let (_, r) = whsg(&["green", "--rel", "L", &fixture("rees.whs"), "b", "c"]);
    assert_eq!(r["answer"], "false");
    let (_, r) = whsg(&["green", "--rel", "h", &fixture("z2.whs"), "g", "e"]);
    assert_eq!(r["answer"], "true");
}

#[test]
fn defect_check() {
    let (_, r) = whsg(&["defect-check", &fixture("palindromes.grammar.json")]);
    assert_eq!(r["answer"], "no");
    let (_, r) = whsg(&["defect-check", &fixture("unbalanced.grammar.json")]);
    assert_eq!(r["answer"], "yes");
    assert_eq!(r["witnesses"]["defect"], serde_json::json!(["a", "#2", "a", "a"]));
}

#[test]
fn files_round_trip_through_the_tool() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z2.whs");
    let (code, _) = whsg(&["from-table", &fixture("z2.table.json"), "--output", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), std::fs::read_to_string(fixture("z2.whs")).unwrap());

    let norm = dir.path().join("rees-normal.whs");
    let (code, _) = whsg(&["normalize", &fixture("rees.whs"), "--output", norm.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, r) = whsg(&["word-eq", norm.to_str().unwrap(), "e", "deb"]);
    assert_eq!(r["answer"], "true");

    let (_, r) = whsg(&["from-table", &fixture("sl2.table.json")]);
    assert!(r["witnesses"]["structure"]["alphabet"].is_array());
}

#[test]
fn exit_codes() {
    let (code, r) = whsg(&["is-clifford", &fixture("rees.whs")]);
    assert_eq!(code, 2);
    assert_eq!(r["answer"], "error");
    let (code, _) = whsg(&["is-completely-simple", "--max-species", "3", &fixture("rb22.whs")]);
    assert_eq!(code, 2);
    let (code, _) = whsg(&["is-monoid", "missing.whs"]);
    assert_eq!(code, 1);
    let (code, _) = whsg(&["no-such-command"]);
    assert_eq!(code, 1);
    let (code, _) = whsg(&["multiply", &fixture("free2.whs"), "ab"]);
    assert_eq!(code, 1);
    let (code, _) = whsg(&["word-eq", &fixture("free2.whs"), "ax", "a"]);
    assert_eq!(code, 1);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.whs");
    std::fs::write(&bad, "{\"alphabet\": [\"#1\"]}").unwrap();
    let (code, _) = whsg(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn reports_are_reproducible() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.to_string()
    };
    let path = fixture("rb22.whs");
    let (_, a) = whsg(&["is-completely-simple", &path]);
    let (_, b) = whsg(&["is-completely-simple", &path]);
    assert_eq!(strip(a), strip(b));
}

use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn sp2g(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sp2g")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = sp2g(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).unwrap())
}

fn validate(doc: &Value) {
    let schema_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}");
}

fn statuses(doc: &Value, which: &str) -> BTreeSet<String> {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == which)
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect()
}

/// `[FAIL] id ...` lines of the text report.
fn text_failures(text: &str) -> BTreeSet<String> {
    text.lines()
        .filter_map(|l| l.strip_prefix("[FAIL] "))
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect()
}

#[test]
fn order_of_sp6_2() {
    let o = sp2g(&["order", "Sp(6,2)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("1451520"), "{text}");
    let (code, doc) = json(&["order", "2B2(2)"]);
    assert_eq!(code, 0);
    validate(&doc);
    let values: Vec<&Value> = doc["checks"][0]["witnesses"].as_array().unwrap().iter().collect();
    assert!(values.iter().any(|w| w["label"] == "simple" && w["lhs"] == "false"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["order", "Foo(3)"][..],
        &["enumerate", "12x"],
        &["enumerate", "sp:0"],
        &["pipeline", "--genus", "99"],
        &["flag-scan", "9", "2"],
        &["flag-scan", "3", "6"],
        &["nonsense"],
    ] {
        let o = sp2g(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn flag_scan_gl3_2() {
    let o = sp2g(&["flag-scan", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("168 matrices scanned, 0 violations"));
    let (_, doc) = json(&["flag-scan", "3", "2"]);
    validate(&doc);
}

#[test]
fn pipeline_genus_3() {
    let (code, doc) = json(&["pipeline", "--genus", "3"]);
    assert_eq!(code, 0);
    validate(&doc);
    let checks = doc["checks"].as_array().unwrap();
    let summary = checks.iter().find(|c| c["id"] == "pipeline.g3.survivors").unwrap();
    assert_eq!(summary["witnesses"][0]["lhs"], "C_3(2)");
    // Every excluded group cites its rule; the survivor has none.
    let entries: Vec<&Value> = checks
        .iter()
        .filter(|c| c["id"] != "pipeline.g3.survivors" && c["id"] != "pipeline.g3.C_3(2)")
        .collect();
    assert!(entries.len() > 20);
    assert!(entries.iter().all(|c| c["citation"].is_string()));
}

#[test]
fn enumerate_sp3_equals_numeric_bound() {
    let (code, a) = json(&["enumerate", "sp:3"]);
    let (_, b) = json(&["enumerate", "1451520"]);
    assert_eq!(code, 0);
    validate(&a);
    assert_eq!(a["checks"], b["checks"]);
    let listed: Vec<&str> = a["checks"][0]["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["label"].as_str().unwrap())
        .collect();
    let lib = sp2g::enumerate::enumerate_simple_below(&1451520.into()).unwrap();
    let want: Vec<String> = lib.ids().iter().map(|g| g.to_string()).collect();
    assert_eq!(listed, want);
}

#[test]
fn reports_are_deterministic() {
    for args in [&["pipeline", "--genus", "5"][..], &["rank-grid"], &["enumerate", "1000000"]] {
        let a = sp2g(args);
        let b = sp2g(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let mut j = vec!["--json"];
        j.extend_from_slice(args);
        assert_eq!(sp2g(&j).stdout, sp2g(&j).stdout, "{args:?}");
    }
}

#[test]
fn verify_paper_reports_agree() {
    let (code, doc) = json(&["verify-paper"]);
    assert_eq!(code, 1);
    validate(&doc);
    let failed = statuses(&doc, "fail");
    let want: BTreeSet<String> = [
        "exceptional.3",
        "pipeline.g6",
        "identity.braid.golden.q3",
        "identity.braid.golden.q5",
        "identity.braid.golden.q7",
        "identity.braid.golden.q9",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    assert_eq!(failed, want);
    let text = sp2g(&["verify-paper"]);
    assert_eq!(text.status.code(), Some(1));
    assert_eq!(text_failures(&stdout(&text)), failed);
}

#[test]
fn corrupted_sporadic_data_fails_fast() {
    let data = include_str!("../data/sporadic.txt").replace("7920", "7921");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sporadic.txt");
    std::fs::write(&path, data).unwrap();
    let (code, doc) = json(&["verify-paper", "--sporadic-data", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    validate(&doc);
    assert_eq!(statuses(&doc, "fail"), BTreeSet::from(["table.sporadic".to_string()]));
    let skipped = statuses(&doc, "skipped");
    assert!(skipped.contains("pipeline.g3") && skipped.contains("chain.alt"), "{skipped:?}");

    std::fs::write(&path, "M11 7920\n").unwrap();
    let o = sp2g(&["verify-paper", "--sporadic-data", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

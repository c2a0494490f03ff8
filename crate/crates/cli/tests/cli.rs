use std::process::{Command, Output};

use adjsq_cli::report::{Report, Results};

fn adjsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjsq")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = adjsq(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    // lossless round trip
    let again: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(again, report);
    (report, out.status.code().unwrap())
}

fn dim_values(r: &Report) -> Vec<u64> {
    match &r.results {
        Results::Dims { rows } => rows.iter().map(|r| r.value).collect(),
        other => panic!("not dims: {other:?}"),
    }
}

fn table_dims(r: &Report) -> Vec<u64> {
    match &r.results {
        Results::Table(t) => t.rows.iter().map(|r| r.dim).collect(),
        other => panic!("not a table: {other:?}"),
    }
}

#[test]
fn dims_examples() {
    let (r, code) = json(&["dims", "--algebra", "su", "--n", "3", "--cartan-power", "2"]);
    assert_eq!((code, dim_values(&r)), (0, vec![8, 27, 27]));
    let (r, _) = json(&["dims", "--algebra", "g2", "--hw", "3theta"]);
    assert_eq!(dim_values(&r)[1], 273);
    let (r, _) = json(&["dims", "--algebra", "su", "--n", "2", "--wedge-power", "1"]);
    assert_eq!(dim_values(&r)[1], 3);
    let (r, _) = json(&["dims", "--algebra", "sp", "--n", "4", "--hw", "1,1"]);
    assert_eq!(dim_values(&r)[1], 5);
    let (r, _) = json(&["dims", "--algebra", "so", "--n", "8", "--dynkin", "--hw", "0,0,0,2"]);
    assert_eq!(dim_values(&r)[1], 35);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["dims", "--algebra", "su", "--n", "3", "--hw", "1,x,0"][..],
        &["dims", "--algebra", "su", "--n", "3", "--hw", "1,0"],
        &["dims", "--algebra", "su", "--n", "3", "--hw", "1/2,0,-1/2"],
        &["dims", "--algebra", "so", "--n", "7", "--wedge-power", "2"],
        &["dims", "--algebra", "xx", "--n", "3"],
        &["decompose", "--algebra", "so", "--n", "4", "--part", "sym"],
        &["verify", "--suite", "harmonic", "--algebra", "su", "--n", "3"],
        &["verify", "--suite", "nope"],
    ] {
        let out = adjsq(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn decompose_examples() {
    let (r, code) = json(&["decompose", "--algebra", "so", "--n", "8", "--part", "sym"]);
    assert_eq!((code, table_dims(&r)), (0, vec![300, 35, 35, 35, 1]));
    let (r, code) = json(&["decompose", "--algebra", "su", "--n", "3", "--part", "alt", "--oracle"]);
    assert_eq!((code, table_dims(&r)), (0, vec![10, 10, 8]));
    assert_eq!(r.checks.len(), 1);
    assert!(r.checks[0].pass);
    let (r, _) = json(&["decompose", "--algebra", "e7", "--part", "sym"]);
    let mut d = table_dims(&r);
    d.sort();
    assert_eq!(d, vec![1, 1539, 7371]);
}

#[test]
fn rationals_in_json_are_fractions() {
    let out = adjsq(&["--json", "decompose", "--algebra", "sp", "--n", "4", "--part", "sym"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for row in v["results"]["rows"].as_array().unwrap() {
        let s = row["split_eigenvalue"].as_str().unwrap();
        assert!(s.contains('/'), "{s}");
    }
    let eigs: Vec<&str> = v["results"]["rows"].as_array().unwrap().iter().map(|r| r["split_eigenvalue"].as_str().unwrap()).collect();
    assert!(eigs.contains(&"-1/1") && eigs.contains(&"-4/1"));
}

#[test]
fn oracle_cap_exits_three() {
    let out = adjsq(&["decompose", "--algebra", "e8", "--part", "sym", "--oracle"]);
    assert_eq!(out.status.code(), Some(3));
    let out = adjsq(&["verify", "--suite", "casimir", "--algebra", "su", "--n", "6"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn max_dim_warns() {
    let out = adjsq(&["--max-dim", "20", "decompose", "--algebra", "su", "--n", "3", "--part", "sym", "--oracle"]);
    assert_eq!(out.status.code(), Some(3));
    let out = adjsq(&["--max-dim", "6000", "decompose", "--algebra", "su", "--n", "3", "--part", "sym"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("warning: size caps overridden"));
}

#[test]
fn verify_examples() {
    let (r, code) = json(&["verify", "--suite", "casimir", "--algebra", "su", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(r.checks.iter().any(|c| c.name.contains("(x-2)(x+3)(x+6)") && c.actual == "0"));
    let (r, code) = json(&["verify", "--suite", "hwv"]);
    assert_eq!(code, 0);
    assert!(r.checks.iter().filter(|c| c.name.starts_with("hwv/su(2)")).count() == 16);
    let (r, code) = json(&["verify", "--suite", "schur", "--n", "2"]);
    assert_eq!(code, 0);
    let c = r.checks.iter().find(|c| c.name == "schur/n=2/k=3/virtual is square").unwrap();
    assert_eq!((c.expected.as_str(), c.actual.as_str()), ("16", "16"));
}

#[test]
fn verify_all_is_sorted_and_complete() {
    let (r, code) = json(&["verify"]);
    assert_eq!(code, 0);
    assert!(!r.checks.is_empty());
    let names: Vec<&String> = r.checks.iter().map(|c| &c.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    match &r.results {
        Results::Verify { suites } => assert_eq!(suites.len(), 5),
        other => panic!("{other:?}"),
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("adjsq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = adjsq(&["--out", path.to_str().unwrap(), "dims", "--algebra", "f4", "--cartan-power", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let saved: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(dim_values(&saved), vec![52, 1053]);
    std::fs::remove_dir_all(dir).ok();
}

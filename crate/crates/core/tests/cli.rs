use std::path::PathBuf;
use std::process::{Command, Output};

use reencode::cli::golden::{self, GoldenRow};
use reencode::galois::Field;
use reencode::koetter::BasisState;
use reencode::poly::MonomialOrder;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rsreenc"))
}

fn write_file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn code_json() -> &'static str {
    r#"{"m": 3, "prim_poly": 11, "k": 2, "support": ["1", "a", "a^2", "a^3"]}"#
}

fn problem_json(points: &[(&str, &str, usize)]) -> String {
    let pts: Vec<String> = points.iter().map(|(x, y, m)| format!(r#"{{"x": "{x}", "y": "{y}", "mult": {m}}}"#)).collect();
    format!(r#"{{"code": {}, "points": [{}]}}"#, code_json(), pts.join(", "))
}

fn example_file(name: &str) -> PathBuf {
    write_file(name, &problem_json(&golden::PROBLEM_POINTS))
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    (status.code().unwrap(), String::from_utf8(stdout).unwrap(), String::from_utf8(stderr).unwrap())
}

fn accepted(report: &Value) -> Vec<Value> {
    let mut v: Vec<Value> = report["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "accepted")
        .map(|c| c["f"].clone())
        .collect();
    v.sort_by_key(|f| f.to_string());
    v
}

/// Checks `--trace` lines against a table, byte for byte after the
/// transcription is put in canonical form.
fn assert_trace(stderr: &str, table: &[GoldenRow], order: MonomialOrder) {
    let spec = golden::field();
    let lines: Vec<&str> = stderr.lines().collect();
    assert_eq!(lines.len(), table.len());
    for (line, &(x, y, m, basis)) in lines.iter().zip(table) {
        let (head, rest) = line.split_once(": ").unwrap();
        assert!(head.starts_with(&format!("({x}, {y}) m={m} [")), "{head}");
        let want = BasisState::from_polys(golden::parse_basis(&spec, basis).unwrap(), order).describe(&spec);
        assert_eq!(rest, want);
    }
}

#[test]
fn encode_example_codeword() {
    let code = write_file("code.json", code_json());
    let (status, out, _) = run(bin().args(["encode", "--code"]).arg(&code).arg("a^6 + a^2*X"));
    assert_eq!(status, 0);
    assert_eq!(out.trim(), golden::CODEWORD);
    let (_, out, _) = run(bin().args(["encode", "--code"]).arg(&code).arg("0"));
    assert_eq!(out.trim(), "0 0 0 0");
    let (_, out, _) = run(bin().args(["encode", "--int", "--code"]).arg(&code).arg("a^6 + a^2*X"));
    assert_eq!(out.trim(), "1 6 3 2");
}

#[test]
fn encode_rejects_long_message() {
    let code = write_file("code_long.json", code_json());
    let (status, _, err) = run(bin().args(["encode", "--code"]).arg(&code).arg("X^2"));
    assert_eq!(status, 2);
    assert!(err.contains("not below k = 2"), "{err}");
}

#[test]
fn decode_both_paths_agree() {
    let file = example_file("example.json");
    let (status, out, _) = run(bin().arg("decode").arg(&file).args(["--tau", "4"]));
    assert_eq!(status, 0);
    let reduced: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(reduced["path"], "reduced");
    assert_eq!(reduced["stats"]["reduced_constraints"], 5);
    let (status, out, _) = run(bin().arg("decode").arg(&file).args(["--path", "direct"]));
    assert_eq!(status, 0);
    let direct: Value = serde_json::from_str(&out).unwrap();
    let want = vec![serde_json::json!(["a^5", "a^6"]), serde_json::json!(["a^6", "a^2"])];
    assert_eq!(accepted(&reduced), want);
    assert_eq!(accepted(&direct), want);
    assert!(out.find("\"candidates\"").unwrap() < out.find("\"counters\"").unwrap());
}

#[test]
fn decode_validate_and_integer_output() {
    let file = example_file("example_int.json");
    let (status, out, _) = run(bin().arg("decode").arg(&file).args(["--validate", "--int", "--tau", "2"]));
    assert_eq!(status, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(accepted(&report), vec![serde_json::json!([5, 4]), serde_json::json!([7, 5])]);
}

#[test]
fn decode_traces_match_tables() {
    let file = example_file("example_trace.json");
    let (status, _, err) = run(bin().arg("decode").arg(&file).args(["--path", "direct", "--schedule", "b-outer", "--trace"]));
    assert_eq!(status, 0);
    assert_trace(&err, &golden::TABLE_ORIGINAL, MonomialOrder::for_dimension(2));

    let (status, _, err) = run(bin().arg("decode").arg(&file).args(["--trace"]));
    assert_eq!(status, 0);
    assert_trace(&err, &golden::TABLE_REDUCED, MonomialOrder::reduced());

    let spec = golden::field();
    let gf = Field::new(spec.clone());
    let shifted = golden::shifted_problem(&gf, &golden::problem(&spec)).unwrap();
    let texts: Vec<(String, String, usize)> =
        shifted.points().iter().map(|p| (spec.display(p.x), spec.display(p.y), p.mult)).collect();
    let pts: Vec<(&str, &str, usize)> = texts.iter().map(|(x, y, m)| (x.as_str(), y.as_str(), *m)).collect();
    let file = write_file("shifted.json", &problem_json(&pts));
    let (status, _, err) = run(bin().arg("decode").arg(&file).args(["--path", "direct", "--trace"]));
    assert_eq!(status, 0);
    assert_trace(&err, &golden::TABLE_SHIFTED, MonomialOrder::for_dimension(2));
}

#[test]
fn decode_exit_codes() {
    let one_x = write_file("one_x.json", &problem_json(&[("a", "1", 2), ("a", "a", 1)]));
    let (status, _, err) = run(bin().arg("decode").arg(&one_x));
    assert_eq!(status, 3, "{err}");
    let bad = write_file("bad.json", "{\"code\": 1}");
    assert_eq!(run(bin().arg("decode").arg(&bad)).0, 2);
    assert_eq!(run(bin().arg("decode").arg("/nonexistent/problem.json")).0, 2);
    assert_eq!(run(bin().args(["decode", "--path", "sideways", "x.json"])).0, 2);
}

#[test]
fn bench_random_small() {
    let (status, out, _) = run(bin().args(["bench", "--random", "15", "7", "3", "--json"]));
    assert_eq!(status, 0);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    for r in &rows {
        assert_eq!(r["decoded"], true);
    }
    let (status, out, _) = run(bin().args(["bench", "--random", "15", "7", "3", "--repeat", "2"]));
    assert_eq!(status, 0);
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn selftest_passes() {
    let (status, out, _) = run(bin().arg("selftest"));
    assert_eq!(status, 0, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 6);
}

use std::path::{Path, PathBuf};
use std::process::Command;

use splitsteiner::{parse_instance, verify_convexity};

const P1: &str = "split 3 4\ne 1 4\ne 1 5\ne 2 5\ne 2 6\ne 2 7\ne 3 6\nstructure path on I\norder 4 5 6 7\nterminals I\n";

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_splitsteiner"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn x3c_example(dir: &Path) -> PathBuf {
    let path = dir.join("x3c_example.split");
    let (code, _, err) = run(&[
        "generate",
        "from-x3c",
        "example",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    path
}

fn json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).unwrap()
}

#[test]
fn oracle_on_the_exact_cover_image() {
    let dir = tempfile::tempdir().unwrap();
    let f = x3c_example(dir.path());
    let (code, out, _) = run(&["solve", f.to_str().unwrap(), "--method", "oracle", "--json"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["size"], 2);
    assert_eq!(doc["answer"], "yes");
    assert_eq!(doc["verified"], true);
}

#[test]
fn path_solver_on_p1() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p1.split", P1);
    let (code, out, _) = run(&["solve", f.to_str().unwrap(), "--method", "path", "--json"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["labels"], serde_json::json!(["w1", "w2"]));
    assert_eq!(doc["solution"], serde_json::json!([1, 2]));
    assert_eq!(doc["method"], "path");
}

#[test]
fn wrong_solver_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p1.split", P1);
    let (code, _, err) = run(&["solve", f.to_str().unwrap(), "--method", "triad"]);
    assert_eq!(code, 2);
    assert!(err.contains("triad"), "{err}");
}

#[test]
fn json_keys_keep_their_order() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p1.split", P1);
    let (_, out, _) = run(&["solve", f.to_str().unwrap(), "--json"]);
    let keys: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(
        keys,
        [
            "instance",
            "requested",
            "method",
            "size",
            "solution",
            "labels",
            "verified",
            "budget",
            "answer",
            "warnings",
            "time_ms"
        ]
    );
}

#[test]
fn budget_that_cannot_be_met_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p1.split", &format!("{P1}budget 1\n"));
    let (code, out, _) = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("answer    no"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.split", "split 2 2\ne 1 3\nfrobnicate\n");
    let (code, _, err) = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn generation_is_deterministic() {
    let (_, a, _) = run(&["generate", "from-x3c", "example"]);
    let (_, b, _) = run(&["generate", "from-x3c", "example"]);
    assert_eq!(a, b);
    assert_eq!(
        a,
        splitsteiner::emit_instance(&splitsteiner::fixtures::x3c_example())
    );
    let (_, c, _) = run(&[
        "generate",
        "random-path",
        "--seed",
        "7",
        "--m",
        "5",
        "--n",
        "8",
    ]);
    let (_, d, _) = run(&[
        "generate",
        "random-path",
        "--seed",
        "7",
        "--m",
        "5",
        "--n",
        "8",
    ]);
    assert_eq!(c, d);
}

#[test]
fn every_generator_emits_convex_instances() {
    let dir = tempfile::tempdir().unwrap();
    let source = write(
        dir.path(),
        "source.split",
        "split 2 3\ne 1 3\ne 1 4\ne 2 4\ne 2 5\nterminals I\n",
    );
    let cases: &[&[&str]] = &[
        &["random-path", "--seed", "7", "--m", "5", "--n", "8"],
        &["random-triad", "--legs", "2,3,2"],
        &["random-circular-i", "--n", "6"],
        &["random-circular-k", "--m", "6"],
        &["random-tree-k"],
        &["random-star", "--degree", "2"],
        &["random-comb", "--n", "6"],
        &["from-x3c", "planted", "--q", "2"],
        &["from-x3c", "random", "--q", "2", "--sets", "6"],
        &["from-vc", "random", "--n", "4"],
        &["to-chordal", "--source", source.to_str().unwrap()],
        &["to-chordal", "--m", "3", "--n", "4"],
    ];
    for case in cases {
        let mut args = vec!["generate"];
        args.extend_from_slice(case);
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{case:?}: {err}");
        let inst = parse_instance(&out).unwrap();
        let s = inst.structure.as_ref().unwrap();
        assert!(verify_convexity(&inst.graph, s).unwrap().valid, "{case:?}");
    }
}

#[test]
fn short_triad_legs_are_rejected() {
    let (code, _, err) = run(&["generate", "random-triad", "--legs", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("at least 2"), "{err}");
}

#[test]
fn verify_reports_valid_and_unreached() {
    let dir = tempfile::tempdir().unwrap();
    let f = x3c_example(dir.path());
    let good = write(dir.path(), "good.sol", "steiner 2 5\n");
    let (code, out, _) = run(&["verify", f.to_str().unwrap(), good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid"));
    let bad = write(dir.path(), "bad.sol", "steiner 1\n");
    let (code, out, _) = run(&[
        "verify",
        f.to_str().unwrap(),
        bad.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code, 1);
    let doc = json(&out);
    assert_eq!(doc["valid"], false);
    assert_eq!(doc["unreached"], serde_json::json!(["x4", "x5", "x6"]));
}

#[test]
fn empty_solution_with_every_vertex_a_terminal() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "all.split",
        "split 2 2\ne 1 3\ne 2 4\nterminals 1 2 3 4\n",
    );
    let sol = write(dir.path(), "empty.sol", "steiner\n");
    let (code, out, _) = run(&["verify", f.to_str().unwrap(), sol.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn solve_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = x3c_example(dir.path());
    let (_, out, _) = run(&[
        "solve",
        f.to_str().unwrap(),
        "--method",
        "star-bounded",
        "--json",
    ]);
    let ids: Vec<String> = json(&out)["solution"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let sol = write(dir.path(), "s.sol", &format!("steiner {}\n", ids.join(" ")));
    let (code, _, _) = run(&["verify", f.to_str().unwrap(), sol.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn bench_on_path_corpus_has_zero_gaps() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    let (code, _, err) = run(&[
        "generate",
        "random-path",
        "--count",
        "50",
        "--seed",
        "100",
        "-o",
        corpus.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = run(&["bench", corpus.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 100);
    let names: Vec<&str> = rows
        .iter()
        .map(|r| r["instance"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for r in rows.iter().filter(|r| r["method"] == "auto") {
        assert_eq!(r["gap"], 0, "{r}");
    }
}

#[test]
fn bench_on_an_empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["bench", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["rows"], serde_json::json!([]));
}

#[test]
fn bench_records_per_instance_failures() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.split", P1);
    write(dir.path(), "b.split", "split 1\n");
    let (code, out, _) = run(&["bench", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert!(rows
        .iter()
        .any(|r| r["instance"] == "b.split" && !r["error"].is_null()));
    assert!(rows
        .iter()
        .any(|r| r["instance"] == "a.split" && r["error"].is_null()));
}

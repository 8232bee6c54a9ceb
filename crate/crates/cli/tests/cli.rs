use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

const K4: &str = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const FANO: &str = "0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", self.stdout))
    }
}

fn tricover(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tricover")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn complete(n: usize) -> String {
    let mut t = String::new();
    for u in 0..n {
        for v in u + 1..n {
            t += &format!("{u} {v}\n");
        }
    }
    t
}

#[test]
fn cover_of_k4() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k4.txt", K4);
    let out = tricover(&["cover", s(&g)]).json();
    assert_eq!(out["schema"], 1);
    assert_eq!(out["size"], 2);
    assert_eq!(out["valid"], true);
    assert_eq!(out["within_twice_packing"], true);
    for strategy in ["fvs", "fes", "bipartite"] {
        let out = tricover(&["cover", s(&g), "--strategy", strategy]).json();
        assert_eq!(out["strategy"], strategy);
        assert_eq!(out["valid"], true);
    }
}

#[test]
fn triangle_free_graph_needs_no_cover() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c5.txt", "a b\nb c\nc d\nd e\ne a\n");
    let out = tricover(&["cover", s(&g), "--explain"]).json();
    assert_eq!(out["size"], 0);
    assert_eq!(out["cover"], Value::Array(vec![]));
    assert_eq!(out["valid"], true);
}

#[test]
fn malformed_graph_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "bad.txt", "1 2\na b c d\n");
    let r = tricover(&["cover", s(&g)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    let r = tricover(&["cover", s(&dir.path().join("missing.txt"))]);
    assert_eq!(r.code, 1);
}

#[test]
fn analyze_reports_conditions() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.txt", K4);
    let out = tricover(&["analyze", s(&k4)]).json();
    assert_eq!(out["cond_iii"]["value"]["ratio"], "3/2");
    assert_eq!(out["cond_iii"]["status"], "false");

    // three triangles sharing the edge 0-1
    let book = file(&dir, "book.txt", "0 1\n0 2\n1 2\n0 3\n1 3\n0 4\n1 4\n");
    let out = tricover(&["analyze", s(&book)]).json();
    assert_eq!(out["cond_iii"]["value"]["ratio"], "7/3");
    assert_eq!(out["cond_iii"]["status"], "true");
    assert_eq!(out["any_condition_holds"], true);

    let k5 = file(&dir, "k5.txt", &complete(5));
    let out = tricover(&["analyze", s(&k5), "--oracle"]).json();
    assert_eq!(out["packing_number"]["exact"], 2);
    assert_eq!(out["cover_number"]["exact"], 4);
    assert_eq!(out["cond_ii"]["value"]["ratio"], "1/5");
}

#[test]
fn oracle_over_budget_exits_4() {
    let dir = TempDir::new().unwrap();
    let k10 = file(&dir, "k10.txt", &complete(10));
    let r = tricover(&["analyze", s(&k10), "--oracle", "--max-edges", "30"]);
    assert_eq!(r.code, 4, "{}", r.stderr);
}

#[test]
fn hypergraph_commands() {
    let dir = TempDir::new().unwrap();
    let fano = file(&dir, "fano.txt", FANO);
    let out = tricover(&["fvs", s(&fano)]).json();
    assert!(out["size"].as_u64().unwrap() <= 2);
    assert_eq!(out["acyclic_after"], true);
    assert_eq!(out["within_bound"], true);

    let out = tricover(&["fes", s(&fano)]).json();
    assert_eq!(out["minimal"], true);
    assert_eq!(out["within_bound"], true);

    let path = file(&dir, "path.txt", "a b c\nc d e\ne f g\n");
    let out = tricover(&["fes", s(&path)]).json();
    assert_eq!(out["size"], 0);
    let out = tricover(&["solve-acyclic", s(&path)]).json();
    assert_eq!(out["size"], 2);
    assert_eq!(out["certified"], true);

    let r = tricover(&["solve-acyclic", s(&fano)]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("cycle"), "{}", r.stderr);

    let pairs = file(&dir, "pairs.txt", "a b c\nc d\n");
    let r = tricover(&["fvs", s(&pairs)]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("not 3-uniform"), "{}", r.stderr);
}

#[test]
fn random_experiment() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("trials.csv");
    let out = tricover(&[
        "random-experiment", "--n", "7", "--p", "1", "--trials", "3", "--seed", "5", "--csv", s(&csv),
    ])
    .json();
    assert_eq!(out["records"][0]["steiner_survivors"], 7);
    assert_eq!(out["aggregate"]["fraction_packing_at_least_quarter"], 1.0);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 4);

    let out = tricover(&["random-experiment", "--n", "9", "--p", "0", "--trials", "2", "--seed", "1"]).json();
    assert_eq!(out["aggregate"]["fraction_packing_at_least_quarter"], Value::Null);

    let r = tricover(&["random-experiment", "--n", "8", "--p", "0.5", "--trials", "1", "--seed", "1"]);
    assert_eq!(r.code, 3);
}

#[test]
fn certificates_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k5.txt", &complete(5));
    let cert = tricover(&["cover", s(&g)]);
    let good = file(&dir, "cert.json", &cert.stdout);
    let r = tricover(&["verify", s(&g), s(&good)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json()["valid"], true);

    let mut tampered = cert.json();
    tampered["cover"].as_array_mut().unwrap().pop();
    tampered["size"] = Value::from(tampered["cover"].as_array().unwrap().len());
    let bad = file(&dir, "bad.json", &tampered.to_string());
    let r = tricover(&["verify", s(&g), s(&bad)]);
    assert_eq!(r.code, 5);
    assert_eq!(r.json()["valid"], false);

    let junk = file(&dir, "junk.json", "{");
    assert_eq!(tricover(&["verify", s(&g), s(&junk)]).code, 2);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k5.txt", &complete(5));
    let h = file(&dir, "fano.txt", FANO);
    let runs: [Vec<&str>; 5] = [
        vec!["cover", s(&g), "--explain"],
        vec!["analyze", s(&g), "--oracle"],
        vec!["fvs", s(&h)],
        vec!["fes", s(&h)],
        vec!["random-experiment", "--n", "13", "--p", "0.7", "--trials", "4", "--seed", "9"],
    ];
    for args in runs {
        let a = tricover(&args);
        let b = tricover(&args);
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;
use treela::generators::random_tree;
use treela::oracle::all_free_trees;
use treela::planar::is_caterpillar;
use treela::FreeTree;

const STAR4: &str = "4\n1 2\n1 3\n1 4\n";
const PATH3: &str = "3\n1 2\n2 3\n";
const SPIDER: &str = "7\n1 2\n2 3\n1 4\n4 5\n1 6\n6 7\n";

fn treela(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treela")).args(args).output().expect("binary runs")
}

fn treela_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treela"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Cost reported on the `D=` line.
fn cost_of(out: &str) -> u64 {
    out.lines()
        .find_map(|l| l.strip_prefix("D="))
        .map(|rest| rest.split_whitespace().next().unwrap().parse().unwrap())
        .expect("a D= line")
}

#[test]
fn solve_star_planar_max() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "star.txt", STAR4);
    let o = treela(&["solve", "maxla", "planar", s(&t)]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(cost_of(&out), 6);
    assert!(out.lines().any(|l| l.starts_with("root=")));
}

#[test]
fn solve_single_vertex() {
    let o = treela_stdin(&["solve", "maxla", "planar", "-"], "1\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "D=0\n1\nroot=1\n");
}

#[test]
fn solve_spider_projective() {
    let o = treela_stdin(&["solve", "maxla", "projective", "-", "--root", "1"], SPIDER);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "D=15\n7 5 6 3 4 1 2\n");
}

#[test]
fn solve_json_output() {
    let o = treela_stdin(&["solve", "minla", "planar", "-", "--json"], PATH3);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["cost"], 2);
    assert_eq!(doc["arrangement"]["n"], 3);
}

#[test]
fn check_in_order_path_is_valid() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "path.txt", "5\n1 2\n2 3\n3 4\n4 5\n");
    let a = write(&dir, "arr.txt", "1 2 3 4 5\n");
    let o = treela(&["check", s(&t), s(&a), "planar"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid\nD=4\n");
}

#[test]
fn check_crossing_is_invalid() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "path.txt", "4\n1 2\n2 3\n3 4\n");
    // vertices in order 1 3 2 4: edges {1,2} and {3,4} interleave
    let a = write(&dir, "arr.txt", "1 3 2 4\n");
    let o = treela(&["check", s(&t), s(&a), "planar"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("invalid\n"));
    let o = treela(&["check", s(&t), s(&a), "unconstrained"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn solver_output_round_trips_through_check() {
    let dir = TempDir::new().unwrap();
    for seed in 0..10 {
        let tree = random_tree(5 + seed as usize * 3, seed);
        let t = write(&dir, "tree.txt", &tree.to_text());
        for (task, kind, root) in [
            ("maxla", "planar", None),
            ("minla", "planar", None),
            ("maxla", "projective", Some("1")),
            ("minla", "projective", Some("2")),
        ] {
            let mut args = vec!["solve", task, kind, s(&t)];
            if let Some(r) = root {
                args.extend(["--root", r]);
            }
            let solved = stdout(&treela(&args));
            let line = solved.lines().nth(1).unwrap();
            let a = write(&dir, "arr.txt", line);
            let mut args = vec!["check", s(&t), s(&a), kind];
            if let Some(r) = root {
                args.extend(["--root", r]);
            }
            let o = treela(&args);
            assert_eq!(o.status.code(), Some(0), "{task} {kind} seed {seed}");
            assert_eq!(cost_of(&stdout(&o)), cost_of(&solved));
        }
    }
}

#[test]
fn oracle_star_planar_max() {
    let o = treela_stdin(&["oracle", "-", "planar", "max"], STAR4);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("D=6 count=12\n"));
}

#[test]
fn oracle_path_values() {
    let o = treela_stdin(&["oracle", "-", "planar", "min"], PATH3);
    assert_eq!(cost_of(&stdout(&o)), 2);
    let o = treela_stdin(&["oracle", "-", "unconstrained", "max"], PATH3);
    assert_eq!(cost_of(&stdout(&o)), 3);
}

#[test]
fn oracle_rejects_large_trees() {
    let text = random_tree(11, 7).to_text();
    let o = treela_stdin(&["oracle", "-", "planar", "max"], &text);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn solver_agrees_with_oracle() {
    let dir = TempDir::new().unwrap();
    for n in 1..=8 {
        for tree in all_free_trees(n).unwrap() {
            let t = write(&dir, "tree.txt", &tree.to_text());
            for (task, goal) in [("maxla", "max"), ("minla", "min")] {
                let solved = cost_of(&stdout(&treela(&["solve", task, "planar", s(&t)])));
                let exact = cost_of(&stdout(&treela(&["oracle", s(&t), "planar", goal])));
                assert_eq!(solved, exact, "{task} on {}", tree.to_text());
            }
        }
    }
}

#[test]
fn gen_star() {
    let o = treela(&["gen", "star", "5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5);
    assert_eq!(FreeTree::parse(&out).unwrap().degree(0), 4);
}

#[test]
fn gen_random_is_reproducible() {
    let a = treela(&["gen", "random", "50", "--seed", "42"]);
    let b = treela(&["gen", "random", "50", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(FreeTree::parse(&stdout(&a)).unwrap().n(), 50);
}

#[test]
fn gen_caterpillar_from_leaf_counts() {
    let o = treela(&["gen", "caterpillar", "--leaves", "2,0,3"]);
    assert!(o.status.success());
    let tree = FreeTree::parse(&stdout(&o)).unwrap();
    assert_eq!(tree.n(), 8);
    assert!(is_caterpillar(&tree));
}

#[test]
fn gen_json() {
    let o = treela(&["gen", "path", "3", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn bench_rows() {
    let o = treela(&["bench", "--sizes", "100,200", "--trials", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = treela(&["bench", "--sizes", "100,200", "--trials", "2", "--json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 2);
    for row in &rows {
        assert!(row["size"].is_u64());
        assert!(row["mean_ns"].as_f64().unwrap() >= 0.0);
        assert!(row["std_ns"].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn malformed_input_exits_one() {
    let o = treela_stdin(&["solve", "maxla", "planar", "-"], "3\n1 2\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    let o = treela(&["solve", "maxla", "planar", "/nonexistent/tree.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["solve", "maxla", "projective", "-"][..],
        &["solve", "maxla", "projective", "-", "--root", "9"],
        &["solve", "maxla", "planar", "-", "--root", "1"],
        &["solve", "maxla", "sideways", "-"],
    ] {
        let o = treela_stdin(args, STAR4);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dot_output() {
    let dir = TempDir::new().unwrap();
    let dot = dir.path().join("out.dot");
    let o = treela_stdin(&["solve", "maxla", "planar", "-", "--dot", s(&dot)], PATH3);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches("shape=semicircle").count(), 2);
}

use std::path::Path;
use std::process::{Command, Output};

use domset::{min_domset_enum, parse_graph, serialize_graph, Graph};
use tempfile::TempDir;

fn domset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serialize_graph(g)).unwrap();
    path.to_str().unwrap().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_solve_matches_enumeration() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("g.col");
    let o = domset(&["gen", "--n", "20", "--p", "0.5", "--seed", "1", "--out", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));

    let g = parse_graph(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(g.n(), 20);
    let gamma = min_domset_enum(&g).size;

    let o = domset(&["solve", "--algo", "exact", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(line.starts_with(&format!("size={gamma} set=")), "{line}");
    assert!(line.trim_end().ends_with("method=branch_and_bound"));
    assert_eq!(line, stdout(&domset(&["solve", "--algo", "exact", path_str(&file)])));

    let o = domset(&["solve", "--algo", "enum", path_str(&file)]);
    assert!(stdout(&o).starts_with(&format!("size={gamma} set=")));
}

#[test]
fn sparse_decide_on_star() {
    let dir = TempDir::new().unwrap();
    let file = write_graph(&dir, "star.col", &Graph::star(15));
    let o = domset(&["decide", "--algo", "sparse", "--g-expr", "sqrt", "--k", "1", &file]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("yes"));
    assert!(out.contains("set=0 "));
}

#[test]
fn decide_no_exits_1() {
    let dir = TempDir::new().unwrap();
    let file = write_graph(&dir, "e.col", &Graph::empty(6));
    for algo in ["exact", "enum"] {
        let o = domset(&["decide", "--algo", algo, "--k", "5", &file]);
        assert_eq!(o.status.code(), Some(1));
        assert_eq!(stdout(&o), "no\n");
    }
    let o = domset(&["decide", "--algo", "fpt-via-approx", "--p", "0.5", "--k", "6", &file]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn hybrid_on_complete_graph() {
    let dir = TempDir::new().unwrap();
    let file = write_graph(&dir, "k8.col", &Graph::complete(8));
    let o = domset(&["solve", "--algo", "hybrid", "--p", "0.5", &file]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "size=1 set=0 method=bounded_enum\n");
}

#[test]
fn solve_requires_p_where_needed() {
    let dir = TempDir::new().unwrap();
    let file = write_graph(&dir, "k4.col", &Graph::complete(4));
    let o = domset(&["solve", "--algo", "hybrid", &file]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--p"));
}

#[test]
fn errors_exit_2() {
    let o = domset(&["solve", "--algo", "nope", "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));

    let o = domset(&["gen", "--n", "5", "--p", "0.5"]);
    assert_eq!(o.status.code(), Some(2));

    let o = domset(&["solve", "--algo", "exact", "/definitely/missing.col"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/definitely/missing.col"));

    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "p edge 3 1\ne 1 4\n").unwrap();
    let o = domset(&["solve", "--algo", "exact", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn hunt_writes_trace() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("g.col");
    let trace = dir.path().join("trace.jsonl");
    domset(&["gen", "--n", "60", "--p", "0.5", "--seed", "3", "--out", path_str(&file)]);
    let o = domset(&["hunt", "--p", "0.5", "--C", "4", "--trace", path_str(&trace), path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("certificate size=") || out.starts_with("no-stall"), "{out}");
    let lines = std::fs::read_to_string(&trace).unwrap();
    assert!(lines.lines().count() >= 1);
    for l in lines.lines() {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert!(v.get("red_count").is_some());
    }
}

#[test]
fn approx_subcommand() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("g.col");
    domset(&["gen", "--n", "30", "--p", "0.5", "--seed", "2", "--out", path_str(&file)]);
    let o = domset(&["approx", "--p", "0.5", "--D", "2", path_str(&file)]);
    assert_eq!(o.status.code(), Some(2));
    let o = domset(&["approx", "--p", "0.5", "--D", "200", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("size="));
}

#[test]
fn experiment_writes_csv_and_summary() {
    let dir = TempDir::new().unwrap();
    let config = dir.path().join("c.json");
    std::fs::write(
        &config,
        r#"{"name":"smoke","n_values":[12,16],"p":0.5,"trials":3,"base_seed":0,"algorithms":["exact","greedy","hybrid"]}"#,
    )
    .unwrap();
    let csv = dir.path().join("out.csv");
    let o = domset(&["experiment", "--config", path_str(&config), "--seed", "5", "--out", path_str(&csv)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * 3 * 3);
    assert!(text.starts_with("trial,seed,n,p,algorithm,size,stage,stall,rounds,elapsed_ns\n"));
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("out.json")).unwrap()).unwrap();
    assert_eq!(summary["config"]["base_seed"], 5);
    assert_eq!(summary["overlays"].as_array().unwrap().len(), 2);

    let o = domset(&["experiment", "--config", path_str(&config), "--out", path_str(&csv)]);
    assert_eq!(o.status.code(), Some(2));

    std::fs::write(&config, r#"{"name":"x","n_values":[5],"p":0.5,"trials":1,"base_seed":0,"algorithms":["magic"]}"#)
        .unwrap();
    let o = domset(&["experiment", "--config", path_str(&config), "--seed", "1", "--out", path_str(&csv)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("magic"));
}

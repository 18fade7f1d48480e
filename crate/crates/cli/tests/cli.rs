use std::path::PathBuf;
use std::process::{Command, Output};

use rotunda::correspondence::{check_compliance, graphic_matroid, CompliantGraph, CompliantGraphFile};
use rotunda::export::{ReducedCliqueGraphFile, RotundaGraphFile};
use rotunda::graph::reduced_clique_graph;
use rotunda::rotunda_graph::rotunda_graph;
use rotunda::{Matroid, SimpleGraph, Weighting};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn rotunda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotunda"))
        .args(args)
        .env_remove("ROTUNDA_ENUM_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn analyze_matroid_fixtures() {
    let u = json(&rotunda(&["analyze", &path("u36.json")]));
    let flags = |v: &serde_json::Value| {
        let p = &v["profile"];
        (p["supersolvable"].as_bool().unwrap(), p["saturated"].as_bool().unwrap(), p["c_chordal"].as_bool().unwrap())
    };
    assert_eq!(flags(&u), (false, true, false));
    let p = json(&rotunda(&["analyze", &path("pabx.json")]));
    assert_eq!(flags(&p), (true, false, true));
    let d = json(&rotunda(&["analyze", &path("diamond-matroid.json")]));
    assert_eq!(flags(&d), (true, true, true));
    assert_eq!(d["tree_width"]["rotunda_tree_width"], 2);
    assert_eq!(d["tree_width"]["brute_force"], 2);
    assert!(d.get("timing_ms").is_none());
}

#[test]
fn analyze_graph_fixture() {
    let d = json(&rotunda(&["analyze", &path("diamond.json")]));
    assert_eq!(d["kind"], "graph");
    assert_eq!(d["chordal"], true);
    assert_eq!(d["maximal_cliques"].as_array().unwrap().len(), 2);
    assert_eq!(d["reduced_clique_graph"]["edges"], serde_json::json!([[0, 1]]));
    assert_eq!(d["tree_width"], 3);
    assert_eq!(d["cycle_matroid"]["reduced_clique_graph_is_rotunda_graph"], true);
    let c = json(&rotunda(&["analyze", &path("c4.json")]));
    assert_eq!(c["chordal"], false);
    assert_eq!(c["chordless_cycle"].as_array().unwrap().len(), 4);
}

#[test]
fn reports_are_stable_and_timing_is_opt_in() {
    let a = rotunda(&["analyze", &path("pabx.json")]);
    let b = rotunda(&["analyze", &path("pabx.json")]);
    assert_eq!(a.stdout, b.stdout);
    let t = json(&rotunda(&["--timing", "analyze", &path("diamond.json")]));
    assert!(t["timing_ms"].is_object());
}

#[test]
fn export_rotunda_graph_dot() {
    let o = rotunda(&["export", &path("diamond.json"), "rotunda-graph", "--dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert_eq!(dot.matches(" [label=").count() - dot.matches(" -- ").count(), 2);
    assert_eq!(dot.matches(" -- ").count(), 1);
    assert!(dot.contains("label=\"σ=1\""));
    let k4 = stdout(&rotunda(&["export", &path("k4.json"), "rotunda-graph", "--dot"]));
    assert!(k4.contains("R0 ["));
    assert!(!k4.contains("R1"));
    assert_eq!(dot, stdout(&rotunda(&["export", &path("diamond.json"), "rotunda-graph", "--dot"])));
}

#[test]
fn exported_json_reingests() {
    let g = SimpleGraph::from_json(&std::fs::read_to_string(fixture("diamond.json")).unwrap()).unwrap();
    let m = graphic_matroid(&g);
    let o = rotunda(&["export", &path("diamond.json"), "rotunda-graph", "--json"]);
    let file: RotundaGraphFile = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(file.to_rotunda_graph(&m).unwrap(), rotunda_graph(&m, &Weighting::Rank).unwrap());
    let o = rotunda(&["export", &path("diamond.json"), "rcg", "--json"]);
    let file: ReducedCliqueGraphFile = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(file.to_reduced_clique_graph(&g).unwrap(), reduced_clique_graph(&g, &Weighting::Cardinality).unwrap());
}

#[test]
fn exported_compliant_graph_passes_the_check() {
    let m = Matroid::from_json(&std::fs::read_to_string(fixture("diamond-matroid.json")).unwrap()).unwrap();
    let o = rotunda(&["export", &path("diamond-matroid.json"), "compliant-graph", "--json"]);
    let file: CompliantGraphFile = serde_json::from_slice(&o.stdout).unwrap();
    let c = CompliantGraph::from_file(&m, file).unwrap();
    assert!(check_compliance(&m, &c.graph, &c.map).unwrap().is_compliant());
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.dot");
    let o = rotunda(&["export", &path("diamond-matroid.json"), "compliant-graph", "--dot", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(out).unwrap().starts_with("graph graph {"));
}

#[test]
fn exit_codes() {
    let o = rotunda(&["export", &path("u36.json"), "rotunda-tree", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not supersolvable"));
    let o = rotunda(&["--bound", "4", "analyze", &path("u36.json")]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_rotunda"))
        .args(["analyze", &path("u36.json")])
        .env("ROTUNDA_ENUM_BOUND", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = rotunda(&["verify", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rotunda(&["analyze", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rotunda(&["export", &path("pabx.json"), "rcg", "--dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_names_the_problem() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, r#"{"type": "circuits", "circuits": [["a", "b"], ["a", "b", "c"]]}"#).unwrap();
    let o = rotunda(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("circuit"));
    std::fs::write(&p, "{\n  \"edges\": [[\"a\"]]\n}").unwrap();
    let o = rotunda(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn verify_runs_a_small_suite() {
    let o = rotunda(&["verify", "venn", "--max-elements", "5", "--graph-order", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    assert!(out.contains("fixtures land in their regions"));
    let o = rotunda(&["verify", "axioms", "--max-elements", "4", "--json"]);
    let v = json(&o);
    assert_eq!(v[0]["suite"], "axioms");
}

#[test]
fn catalog_list() {
    let o = rotunda(&["catalog-list", "--max-order", "3", "--json"]);
    let v = json(&o);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"U36"));
    assert!(names.contains(&"F7"));
}

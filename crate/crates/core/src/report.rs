//! Analysis reports for a matroid or graph file.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classification::classify;
use crate::correspondence::{check_rcg_equals_rotunda_graph, graphic_matroid, rotunda_are_clique_edge_sets};
use crate::error::{Error, Result};
use crate::export::{CliqueTreeFile, FlatFile, ReducedCliqueGraphFile, RotundaGraphFile, RotundaTreeFile};
use crate::graph::{clique_trees, graph_tree_width, is_chordal, maximal_cliques, reduced_clique_graph, Chordality, SimpleGraph};
use crate::matroid::{Matroid, MatroidFile};
use crate::rotunda_graph::{rotunda_graph, rotunda_tree};
use crate::roundness::rotunda;
use crate::treewidth::{brute_force_treewidth, rotunda_treewidth, round_flat_lower_bound, BRUTE_FORCE_ELEMENT_BOUND};
use crate::weighting::Weighting;

/// A parsed input file.
#[derive(Clone, Debug)]
pub enum Input {
    Matroid(Matroid),
    Graph(SimpleGraph),
}

impl Input {
    /// Matroid files carry a `"type"` key; anything else is read as a graph.
    pub fn parse(text: &str) -> Result<Input> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if value.get("type").is_some() {
            let file: MatroidFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Input::Matroid(file.into_matroid()?))
        } else {
            Ok(Input::Graph(SimpleGraph::from_json(text)?))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub supersolvable: bool,
    pub saturated: bool,
    pub c_chordal: bool,
    pub chain: Option<Vec<FlatFile>>,
    pub unsaturated_witness: Option<FlatFile>,
    pub chordless_circuit: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeWidthReport {
    /// Largest rotunda rank, met by every rotunda tree.
    pub rotunda_tree_width: i64,
    pub round_flat_lower_bound: i64,
    /// Present for ground sets small enough to search.
    pub brute_force: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidReport {
    pub name: String,
    pub size: usize,
    pub rank: usize,
    pub connected: bool,
    pub profile: Profile,
    pub rotunda: Vec<FlatFile>,
    pub rotunda_graph: Option<RotundaGraphFile>,
    pub rotunda_tree: Option<RotundaTreeFile>,
    pub tree_width: Option<TreeWidthReport>,
    /// Why the rotunda graph and tree-width were skipped.
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleMatroidCheck {
    pub rotunda_are_clique_edge_sets: bool,
    /// Only for 2-connected chordal graphs.
    pub reduced_clique_graph_is_rotunda_graph: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub chordal: bool,
    pub elimination_order: Option<Vec<String>>,
    pub chordless_cycle: Option<Vec<String>>,
    pub maximal_cliques: Option<Vec<Vec<String>>>,
    pub reduced_clique_graph: Option<ReducedCliqueGraphFile>,
    pub clique_tree: Option<CliqueTreeFile>,
    /// Largest bag of an optimal decomposition, without subtracting one.
    pub tree_width: Option<usize>,
    pub cycle_matroid: CycleMatroidCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AnalysisReport {
    Matroid(MatroidReport),
    Graph(GraphReport),
}

/// Wall-clock milliseconds per stage, kept apart from the report so
/// reports stay reproducible.
pub type Timing = BTreeMap<String, f64>;

fn timed<T>(timing: &mut Timing, stage: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let start = std::time::Instant::now();
    let out = f();
    timing.insert(stage.to_string(), start.elapsed().as_secs_f64() * 1e3);
    out
}

pub fn analyze(input: &Input, name: &str) -> Result<(AnalysisReport, Timing)> {
    let mut timing = Timing::new();
    let report = match input {
        Input::Matroid(m) => AnalysisReport::Matroid(analyze_matroid(m, name, &mut timing)?),
        Input::Graph(g) => AnalysisReport::Graph(analyze_graph(g, name, &mut timing)?),
    };
    Ok((report, timing))
}

fn analyze_matroid(m: &Matroid, name: &str, timing: &mut Timing) -> Result<MatroidReport> {
    let p = timed(timing, "classify", || classify(m))?;
    let profile = Profile {
        supersolvable: p.supersolvable,
        saturated: p.saturated,
        c_chordal: p.c_chordal,
        chain: p.chain.as_ref().map(|c| c.flats.iter().map(|f| FlatFile::new(m, f)).collect()),
        unsaturated_witness: p.unsaturated_witness.as_ref().map(|f| FlatFile::new(m, f)),
        chordless_circuit: p.chordless_circuit.map(|c| m.set_labels(c)),
    };
    let rot = timed(timing, "rotunda", || rotunda(m))?;
    let connected = m.is_connected()?;
    let mut report = MatroidReport {
        name: m.name().unwrap_or(name).to_string(),
        size: m.size(),
        rank: m.full_rank(),
        connected,
        profile,
        rotunda: rot.iter().map(|r| FlatFile::new(m, r)).collect(),
        rotunda_graph: None,
        rotunda_tree: None,
        tree_width: None,
        skipped: None,
    };
    if !(p.supersolvable && p.saturated) {
        report.skipped = Some("not supersolvable and saturated".into());
        return Ok(report);
    }
    let rg = timed(timing, "rotunda_graph", || rotunda_graph(m, &Weighting::Rank))?;
    report.rotunda_graph = Some(RotundaGraphFile::new(m, &rg));
    if !connected {
        report.skipped = Some("disconnected; rotunda trees need a connected matroid".into());
        return Ok(report);
    }
    let rt = timed(timing, "rotunda_tree", || rotunda_tree(m, &Weighting::Rank))?;
    report.rotunda_tree = Some(RotundaTreeFile::new(m, &rt));
    let tw = timed(timing, "tree_width", || {
        Ok(TreeWidthReport {
            rotunda_tree_width: rotunda_treewidth(m)?,
            round_flat_lower_bound: round_flat_lower_bound(m)?,
            brute_force: if m.size() <= BRUTE_FORCE_ELEMENT_BOUND {
                Some(brute_force_treewidth(m)?)
            } else {
                None
            },
        })
    })?;
    report.tree_width = Some(tw);
    Ok(report)
}

fn analyze_graph(g: &SimpleGraph, name: &str, timing: &mut Timing) -> Result<GraphReport> {
    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>();
    let chordality = timed(timing, "chordality", || Ok(is_chordal(g)))?;
    let mut report = GraphReport {
        name: name.to_string(),
        vertices: g.order(),
        edges: g.edge_count(),
        chordal: chordality.is_chordal(),
        elimination_order: None,
        chordless_cycle: None,
        maximal_cliques: None,
        reduced_clique_graph: None,
        clique_tree: None,
        tree_width: None,
        cycle_matroid: CycleMatroidCheck {
            rotunda_are_clique_edge_sets: false,
            reduced_clique_graph_is_rotunda_graph: None,
        },
    };
    match &chordality {
        Chordality::Chordal(order) => report.elimination_order = Some(labels(order)),
        Chordality::ChordlessCycle(cycle) => report.chordless_cycle = Some(labels(cycle)),
    }
    if report.chordal {
        let cliques = timed(timing, "maximal_cliques", || maximal_cliques(g))?;
        report.maximal_cliques = Some(cliques.iter().map(|&c| g.set_labels(c)).collect());
        let rcg = timed(timing, "reduced_clique_graph", || reduced_clique_graph(g, &Weighting::Cardinality))?;
        report.reduced_clique_graph = Some(ReducedCliqueGraphFile::new(g, &rcg));
        if g.is_connected() {
            let ct = timed(timing, "clique_tree", || clique_trees(g))?;
            report.clique_tree = ct.first().map(|t| CliqueTreeFile::new(g, t));
        }
        report.tree_width = Some(graph_tree_width(g)?);
    }
    let m = graphic_matroid(g);
    report.cycle_matroid.rotunda_are_clique_edge_sets = timed(timing, "cycle_matroid", || rotunda_are_clique_edge_sets(g))?;
    if report.chordal && g.is_two_connected() && m.size() > 0 {
        report.cycle_matroid.reduced_clique_graph_is_rotunda_graph = Some(check_rcg_equals_rotunda_graph(g)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{pabx, u36};

    #[test]
    fn matroid_profiles() {
        let (r, _) = analyze(&Input::Matroid(u36()), "u36").unwrap();
        let AnalysisReport::Matroid(r) = r else { panic!() };
        assert_eq!((r.profile.supersolvable, r.profile.saturated, r.profile.c_chordal), (false, true, false));
        assert!(r.rotunda_graph.is_none());
        let (r, _) = analyze(&Input::Matroid(pabx()), "pabx").unwrap();
        let AnalysisReport::Matroid(r) = r else { panic!() };
        assert_eq!((r.profile.supersolvable, r.profile.saturated, r.profile.c_chordal), (true, false, true));
    }

    #[test]
    fn diamond_graph_report() {
        let text = r#"{"vertices": ["a", "b", "c", "d"], "edges": [["a","b"],["a","c"],["b","c"],["b","d"],["c","d"]]}"#;
        let input = Input::parse(text).unwrap();
        let (r, _) = analyze(&input, "diamond").unwrap();
        let AnalysisReport::Graph(r) = r else { panic!() };
        assert!(r.chordal);
        assert_eq!(r.maximal_cliques.as_ref().unwrap().len(), 2);
        assert_eq!(r.reduced_clique_graph.as_ref().unwrap().edges, vec![[0, 1]]);
        assert_eq!(r.tree_width, Some(3));
        assert_eq!(r.cycle_matroid.reduced_clique_graph_is_rotunda_graph, Some(true));
    }

    #[test]
    fn parse_picks_the_format() {
        assert!(matches!(Input::parse(r#"{"type": "uniform", "rank": 2, "size": 3}"#).unwrap(), Input::Matroid(_)));
        assert!(matches!(Input::parse(r#"{"edges": []}"#).unwrap(), Input::Graph(_)));
        assert!(matches!(Input::parse("{"), Err(Error::Parse(_))));
    }
}

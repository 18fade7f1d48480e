//! DOT and JSON renderings of the computed objects.
//!
//! DOT node ids are stable: `R0, R1, …` for rotunda, `C0, C1, …` for
//! maximal cliques and `v0, v1, …` for graph vertices. JSON is written with
//! sorted object keys.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CliqueTree, ReducedCliqueGraph, SimpleGraph, VertexSet};
use crate::matroid::{Flat, Matroid};
use crate::modularity::ModularCover;
use crate::rotunda_graph::{RotundaEdge, RotundaGraph, RotundaTree};
use crate::trees::Tree;

/// Pretty JSON with object keys sorted at every level.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("exported types serialize");
    serde_json::to_string_pretty(&v).expect("json values serialize")
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn dot_graph(name: &str, nodes: &[(String, String)], edges: &[(String, String, Vec<(&str, String)>)]) -> String {
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    for (id, label) in nodes {
        writeln!(s, "  {id} [label={}];", quote(label)).unwrap();
    }
    for (a, b, attrs) in edges {
        if attrs.is_empty() {
            writeln!(s, "  {a} -- {b};").unwrap();
        } else {
            let attrs: Vec<String> = attrs.iter().map(|(k, v)| format!("{k}={}", quote(v))).collect();
            writeln!(s, "  {a} -- {b} [{}];", attrs.join(", ")).unwrap();
        }
    }
    s.push_str("}\n");
    s
}

fn cover_text(m: &Matroid, c: &ModularCover) -> String {
    format!("F1 = {}; F2 = {}", m.format_set(c.first.elements), m.format_set(c.second.elements))
}

pub fn rotunda_graph_dot(m: &Matroid, rg: &RotundaGraph) -> String {
    let nodes: Vec<(String, String)> = rg
        .rotunda
        .iter()
        .enumerate()
        .map(|(i, r)| (format!("R{i}"), m.format_set(r.elements)))
        .collect();
    let edges: Vec<_> = rg
        .edges
        .iter()
        .map(|e| {
            (
                format!("R{}", e.i),
                format!("R{}", e.j),
                vec![("label", format!("σ={}", e.weight)), ("tooltip", cover_text(m, &e.cover))],
            )
        })
        .collect();
    dot_graph("rotunda_graph", &nodes, &edges)
}

pub fn rotunda_tree_dot(m: &Matroid, rt: &RotundaTree) -> String {
    let nodes: Vec<(String, String)> = rt
        .rotunda
        .iter()
        .enumerate()
        .map(|(i, r)| (format!("R{i}"), m.format_set(r.elements)))
        .collect();
    let edges: Vec<_> = rt
        .tree
        .edges()
        .iter()
        .map(|&(a, b)| {
            let meet = rt.rotunda[a].elements & rt.rotunda[b].elements;
            (format!("R{a}"), format!("R{b}"), vec![("label", m.format_set(meet))])
        })
        .collect();
    dot_graph("rotunda_tree", &nodes, &edges)
}

pub fn reduced_clique_graph_dot(g: &SimpleGraph, rcg: &ReducedCliqueGraph) -> String {
    let nodes: Vec<(String, String)> = rcg
        .cliques
        .iter()
        .enumerate()
        .map(|(i, &c)| (format!("C{i}"), g.format_set(c)))
        .collect();
    let edges: Vec<_> = rcg
        .edges
        .iter()
        .zip(&rcg.weights)
        .map(|(&(i, j), w)| {
            let meet = rcg.cliques[i] & rcg.cliques[j];
            (
                format!("C{i}"),
                format!("C{j}"),
                vec![("label", format!("σ={w}")), ("tooltip", g.format_set(meet))],
            )
        })
        .collect();
    dot_graph("reduced_clique_graph", &nodes, &edges)
}

pub fn clique_tree_dot(g: &SimpleGraph, ct: &CliqueTree) -> String {
    let nodes: Vec<(String, String)> = ct
        .cliques
        .iter()
        .enumerate()
        .map(|(i, &c)| (format!("C{i}"), g.format_set(c)))
        .collect();
    let edges: Vec<_> = ct
        .tree
        .edges()
        .iter()
        .map(|&(a, b)| (format!("C{a}"), format!("C{b}"), vec![("label", g.format_set(ct.cliques[a] & ct.cliques[b]))]))
        .collect();
    dot_graph("clique_tree", &nodes, &edges)
}

/// A plain graph; `owner` appends a note to each vertex label.
pub fn graph_dot(g: &SimpleGraph, owner: Option<&dyn Fn(usize) -> String>) -> String {
    let nodes: Vec<(String, String)> = (0..g.order())
        .map(|v| {
            let label = match owner {
                Some(f) => format!("{} ({})", g.label(v), f(v)),
                None => g.label(v).to_string(),
            };
            (format!("v{v}"), label)
        })
        .collect();
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (format!("v{u}"), format!("v{v}"), Vec::new())).collect();
    dot_graph("graph", &nodes, &edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatFile {
    pub elements: Vec<String>,
    pub rank: usize,
}

impl FlatFile {
    pub fn new(m: &Matroid, f: &Flat) -> Self {
        FlatFile {
            elements: m.set_labels(f.elements),
            rank: f.rank,
        }
    }

    pub fn to_flat(&self, m: &Matroid) -> Result<Flat> {
        let refs: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        let set = m.set(&refs)?;
        if !m.view().is_flat(set) || m.rank(set) != self.rank {
            return Err(Error::NotAFlat(m.format_set(set)));
        }
        Ok(Flat::new(set, self.rank))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotundaEdgeFile {
    pub i: usize,
    pub j: usize,
    pub weight: u64,
    pub cover: [FlatFile; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotundaGraphFile {
    pub rotunda: Vec<FlatFile>,
    pub edges: Vec<RotundaEdgeFile>,
}

impl RotundaGraphFile {
    pub fn new(m: &Matroid, rg: &RotundaGraph) -> Self {
        RotundaGraphFile {
            rotunda: rg.rotunda.iter().map(|r| FlatFile::new(m, r)).collect(),
            edges: rg
                .edges
                .iter()
                .map(|e| RotundaEdgeFile {
                    i: e.i,
                    j: e.j,
                    weight: e.weight,
                    cover: [FlatFile::new(m, &e.cover.first), FlatFile::new(m, &e.cover.second)],
                })
                .collect(),
        }
    }

    pub fn to_rotunda_graph(&self, m: &Matroid) -> Result<RotundaGraph> {
        let rotunda = self.rotunda.iter().map(|r| r.to_flat(m)).collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if e.i >= rotunda.len() || e.j >= rotunda.len() {
                    return Err(Error::Parse(format!("edge ({}, {}) names a missing rotunda", e.i, e.j)));
                }
                Ok(RotundaEdge {
                    i: e.i,
                    j: e.j,
                    weight: e.weight,
                    cover: ModularCover {
                        first: e.cover[0].to_flat(m)?,
                        second: e.cover[1].to_flat(m)?,
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RotundaGraph { rotunda, edges })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotundaTreeFile {
    pub rotunda: Vec<FlatFile>,
    pub edges: Vec<[usize; 2]>,
}

impl RotundaTreeFile {
    pub fn new(m: &Matroid, rt: &RotundaTree) -> Self {
        RotundaTreeFile {
            rotunda: rt.rotunda.iter().map(|r| FlatFile::new(m, r)).collect(),
            edges: rt.tree.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_rotunda_tree(&self, m: &Matroid) -> Result<RotundaTree> {
        let rotunda = self.rotunda.iter().map(|r| r.to_flat(m)).collect::<Result<Vec<_>>>()?;
        let tree = Tree::new(rotunda.len(), self.edges.iter().map(|&[a, b]| (a, b)).collect())?;
        Ok(RotundaTree { rotunda, tree })
    }
}

fn vertex_set(g: &SimpleGraph, labels: &[String]) -> Result<VertexSet> {
    labels.iter().map(|l| g.vertex(l)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedCliqueGraphFile {
    pub cliques: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub weights: Vec<u64>,
}

impl ReducedCliqueGraphFile {
    pub fn new(g: &SimpleGraph, rcg: &ReducedCliqueGraph) -> Self {
        ReducedCliqueGraphFile {
            cliques: rcg.cliques.iter().map(|&c| g.set_labels(c)).collect(),
            edges: rcg.edges.iter().map(|&(a, b)| [a, b]).collect(),
            weights: rcg.weights.clone(),
        }
    }

    pub fn to_reduced_clique_graph(&self, g: &SimpleGraph) -> Result<ReducedCliqueGraph> {
        if self.weights.len() != self.edges.len() {
            return Err(Error::Parse("one weight per edge is required".into()));
        }
        Ok(ReducedCliqueGraph {
            cliques: self.cliques.iter().map(|c| vertex_set(g, c)).collect::<Result<_>>()?,
            edges: self.edges.iter().map(|&[a, b]| (a, b)).collect(),
            weights: self.weights.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTreeFile {
    pub cliques: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

impl CliqueTreeFile {
    pub fn new(g: &SimpleGraph, ct: &CliqueTree) -> Self {
        CliqueTreeFile {
            cliques: ct.cliques.iter().map(|&c| g.set_labels(c)).collect(),
            edges: ct.tree.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_clique_tree(&self, g: &SimpleGraph) -> Result<CliqueTree> {
        let cliques: Vec<VertexSet> = self.cliques.iter().map(|c| vertex_set(g, c)).collect::<Result<_>>()?;
        let tree = Tree::new(cliques.len(), self.edges.iter().map(|&[a, b]| (a, b)).collect())?;
        Ok(CliqueTree { cliques, tree })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique_trees, reduced_clique_graph};
    use crate::rotunda_graph::{rotunda_graph, rotunda_tree};
    use crate::weighting::Weighting;

    fn diamond() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn diamond_rotunda_graph_dot() {
        let m = crate::correspondence::graphic_matroid(&diamond());
        let rg = rotunda_graph(&m, &Weighting::Rank).unwrap();
        let dot = rotunda_graph_dot(&m, &rg);
        assert!(dot.starts_with("graph rotunda_graph {"));
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("R0 -- R1 [label=\"σ=1\""));
        assert_eq!(dot, rotunda_graph_dot(&m, &rotunda_graph(&m, &Weighting::Rank).unwrap()));
    }

    #[test]
    fn json_files_round_trip() {
        let g = diamond();
        let m = crate::correspondence::graphic_matroid(&g);
        let rg = rotunda_graph(&m, &Weighting::Rank).unwrap();
        let file: RotundaGraphFile = serde_json::from_str(&to_sorted_json(&RotundaGraphFile::new(&m, &rg))).unwrap();
        assert_eq!(file.to_rotunda_graph(&m).unwrap(), rg);
        let rt = rotunda_tree(&m, &Weighting::Rank).unwrap();
        let file: RotundaTreeFile = serde_json::from_str(&to_sorted_json(&RotundaTreeFile::new(&m, &rt))).unwrap();
        assert_eq!(file.to_rotunda_tree(&m).unwrap(), rt);
        let rcg = reduced_clique_graph(&g, &Weighting::Cardinality).unwrap();
        let file: ReducedCliqueGraphFile = serde_json::from_str(&to_sorted_json(&ReducedCliqueGraphFile::new(&g, &rcg))).unwrap();
        assert_eq!(file.to_reduced_clique_graph(&g).unwrap(), rcg);
        let ct = clique_trees(&g).unwrap().remove(0);
        let file: CliqueTreeFile = serde_json::from_str(&to_sorted_json(&CliqueTreeFile::new(&g, &ct))).unwrap();
        assert_eq!(file.to_clique_tree(&g).unwrap(), ct);
    }

    #[test]
    fn keys_are_sorted_and_labels_escaped() {
        #[derive(Serialize)]
        struct S {
            zeta: u8,
            alpha: u8,
        }
        let text = to_sorted_json(&S { zeta: 1, alpha: 2 });
        assert!(text.find("alpha").unwrap() < text.find("zeta").unwrap());
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}

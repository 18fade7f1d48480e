//! Simple undirected graphs on at most 64 vertices, with the chordal-graph
//! machinery (elimination orders, maximal cliques, reduced clique graphs and
//! clique trees).

mod chordal;
mod iso;

pub use chordal::{
    clique_graph, clique_trees, graph_tree_width, is_chordal, is_separating_pair, maximal_cliques,
    reduced_clique_graph, Chordality, CliqueTree, ReducedCliqueGraph, CLIQUE_BOUND,
    CLIQUE_TREE_ENUMERATION_BOUND,
};
pub use iso::{are_isomorphic, are_isomorphic_brute_force, canonical_form, find_isomorphism};

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Vertex subsets share the element bitset representation.
pub type VertexSet = ElementSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

/// The graph file format: `{"vertices": [str], "edges": [[str, str]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(default)]
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl SimpleGraph {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() > crate::bitset::MAX_ELEMENTS {
            return Err(Error::InvalidGraph(format!("{} vertices exceed the maximum of 64", labels.len())));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::InvalidGraph(format!("duplicate vertex label `{dup}`")));
        }
        let n = labels.len();
        Ok(SimpleGraph {
            labels,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Graph on vertices labelled `0..n`.
    pub fn with_order(n: usize) -> Self {
        SimpleGraph::new((0..n).map(|i| i.to_string()).collect()).expect("numeric labels are unique")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::with_order(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::with_order(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid endpoints");
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        SimpleGraph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Adjacency given as bitmasks, used by the enumeration code.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        SimpleGraph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adj,
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.labels.contains(&label) {
            return Err(Error::InvalidGraph(format!("duplicate vertex label `{label}`")));
        }
        if self.labels.len() == crate::bitset::MAX_ELEMENTS {
            return Err(Error::InvalidGraph("graph already has 64 vertices".into()));
        }
        self.labels.push(label);
        self.adj.push(VertexSet::EMPTY);
        Ok(self.labels.len() - 1)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) leaves 0..{n}")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at `{}`", self.labels[u])));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{label}`")))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    /// Vertices reachable from `start` inside `allowed`.
    pub fn reach(&self, start: VertexSet, allowed: VertexSet) -> VertexSet {
        let mut seen = start & allowed;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = next & allowed - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach(VertexSet::singleton(v), within);
            out.push(comp);
            left -= comp;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.components().len();
        (0..self.order())
            .filter(|&v| self.components_within(self.vertices().without(v)).len() > base)
            .collect()
    }

    /// Connected with no cut-vertex.
    pub fn is_two_connected(&self) -> bool {
        self.is_connected() && self.cut_vertices().is_empty()
    }

    pub fn induced(&self, s: VertexSet) -> SimpleGraph {
        let ids: Vec<usize> = s.iter().collect();
        let mut g = SimpleGraph::new(ids.iter().map(|&v| self.labels[v].clone()).collect())
            .expect("labels were unique");
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("valid");
                }
            }
        }
        g
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn set_labels(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        SimpleGraph::from_file(file)
    }

    pub fn from_file(file: GraphFile) -> Result<Self> {
        let mut labels = file.vertices;
        for [u, v] in &file.edges {
            for x in [u, v] {
                if !labels.contains(x) {
                    labels.push(x.clone());
                }
            }
        }
        let mut g = SimpleGraph::new(labels)?;
        for [u, v] in &file.edges {
            let (a, b) = (g.vertex(u)?, g.vertex(v)?);
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| [self.labels[u].clone(), self.labels[v].clone()])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph files always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    #[test]
    fn basic_structure() {
        let g = SimpleGraph::complete(4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_clique(g.vertices()));
        assert_eq!(g.edges()[0], (0, 1));
        assert!(g.is_two_connected());
        assert!(SimpleGraph::with_order(2).add_edge(0, 0).is_err());
    }

    #[test]
    fn cut_vertices_of_a_path_and_star() {
        assert_eq!(SimpleGraph::path(3).cut_vertices(), vs(&[1]));
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.cut_vertices(), vs(&[0]));
        assert!(!star.is_two_connected());
        // K_2 is connected with no cut-vertex
        assert!(SimpleGraph::complete(2).is_two_connected());
    }

    #[test]
    fn components_and_reach() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![vs(&[0, 1]), vs(&[2, 3]), vs(&[4])]);
        assert_eq!(g.reach(vs(&[0]), g.vertices()), vs(&[0, 1]));
        assert!(!g.is_connected());
    }

    #[test]
    fn json_round_trip() {
        let g = SimpleGraph::from_json(r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["a","c"],["c","d"]]}"#)
            .unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(SimpleGraph::from_json(r#"{"edges":[["a","a"]]}"#).is_err());
    }
}

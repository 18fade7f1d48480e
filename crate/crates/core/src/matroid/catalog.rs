//! Named fixtures and the small-matroid catalog used by the property suites.

use std::collections::HashSet;

use super::Matroid;
use crate::bitset::ElementSet;
use crate::graph::{canonical_form, SimpleGraph, VertexSet};

/// Connected graphs are enumerated up to this many vertices; larger requests
/// are clamped.
pub const GRAPH_ORDER_LIMIT: usize = 7;

// Graphic matroids with more edges than this are left out of the catalog.
const GRAPH_EDGE_LIMIT: usize = 16;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: Matroid,
    /// The graph for graphic entries.
    pub graph: Option<SimpleGraph>,
}

fn letters(s: &str) -> Vec<String> {
    s.chars().map(String::from).collect()
}

fn lines(labels: &[String], spec: &[&str]) -> Vec<ElementSet> {
    spec.iter()
        .map(|l| {
            l.chars()
                .map(|c| labels.iter().position(|x| *x == c.to_string()).expect("fixture label"))
                .collect()
        })
        .collect()
}

/// `U_{3,6}` on `a..f`.
pub fn u36() -> Matroid {
    Matroid::uniform_with_labels(3, letters("abcdef"))
        .expect("valid uniform matroid")
        .with_name("U36")
}

pub fn uniform(rank: usize, size: usize) -> Matroid {
    Matroid::uniform(rank, size)
        .expect("rank at most size")
        .with_name(format!("U{rank}{size}"))
}

/// The Fano plane: columns are the seven non-zero vectors of GF(2)^3.
pub fn fano() -> Matroid {
    let rows: Vec<Vec<i64>> = (0..3)
        .map(|bit| (1..8).map(|c: i64| (c >> bit) & 1).collect())
        .collect();
    let labels = (1..8).map(|c| c.to_string()).collect();
    Matroid::linear_with_labels(2, rows, labels)
        .expect("valid binary matrix")
        .with_name("F7")
}

/// Rank 3 on `a..f` with lines `abd`, `bce`, `acf`.
pub fn w4() -> Matroid {
    let labels = letters("abcdef");
    let l = lines(&labels, &["abd", "bce", "acf"]);
    Matroid::rank3_from_lines(labels, &l)
        .expect("valid line configuration")
        .with_name("W4")
}

/// Rank 3 on `p, a..f, x` with lines `pabc`, `pdef`, `adx`, `bex`, `cfx`.
pub fn pabx() -> Matroid {
    let labels = letters("pabcdefx");
    let l = lines(&labels, &["pabc", "pdef", "adx", "bex", "cfx"]);
    Matroid::rank3_from_lines(labels, &l)
        .expect("valid line configuration")
        .with_name("PABX")
}

/// The bond matroid of `K_{3,3}`: its circuits are the minimal edge cuts.
pub fn k33_dual() -> Matroid {
    let g = k33();
    let edges = g.edges();
    let labels: Vec<String> = edges
        .iter()
        .map(|&(u, v)| format!("{}-{}", g.label(u), g.label(v)))
        .collect();
    let bonds = minimal_cuts(&g, &edges);
    Matroid::from_circuits_with_labels(labels, bonds)
        .expect("bonds satisfy circuit elimination")
        .with_name("M*(K33)")
}

pub(crate) fn k33() -> SimpleGraph {
    let mut g = SimpleGraph::new(["a1", "a2", "a3", "b1", "b2", "b3"].map(String::from).to_vec())
        .expect("distinct labels");
    for u in 0..3 {
        for v in 3..6 {
            g.add_edge(u, v).expect("valid edge");
        }
    }
    g
}

/// Edge sets `δ(S)` where both sides of the cut induce connected subgraphs.
pub(crate) fn minimal_cuts(g: &SimpleGraph, edges: &[(usize, usize)]) -> Vec<ElementSet> {
    let all = g.vertices();
    let mut cuts: Vec<ElementSet> = all
        .subsets()
        .filter(|s| s.contains(0) && *s != all)
        .filter(|&s| g.components_within(s).len() == 1 && g.components_within(all - s).len() == 1)
        .map(|s| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| s.contains(u) != s.contains(v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    cuts.sort();
    cuts
}

/// One representative of every connected simple graph on `1..=max_n`
/// vertices, up to isomorphism. Ordered by order, then edge count, then
/// canonical code.
pub fn connected_graphs(max_n: usize) -> Vec<SimpleGraph> {
    let max_n = max_n.min(GRAPH_ORDER_LIMIT);
    if max_n == 0 {
        return Vec::new();
    }
    let mut all = vec![SimpleGraph::with_order(1)];
    let mut level = all.clone();
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next: Vec<((usize, Vec<u64>), SimpleGraph)> = Vec::new();
        for g in &level {
            // every connected graph has a non-cut vertex, so adding one vertex
            // to each smaller connected graph reaches all of them
            for nbrs in VertexSet::full(n - 1).subsets().skip(1) {
                let mut adj: Vec<VertexSet> = (0..n - 1)
                    .map(|v| if nbrs.contains(v) { g.neighbors(v).with(n - 1) } else { g.neighbors(v) })
                    .collect();
                adj.push(nbrs);
                let h = SimpleGraph::from_adjacency(adj);
                let code = canonical_form(&h);
                if seen.insert(code.clone()) {
                    next.push((code, h));
                }
            }
        }
        next.sort_by(|a, b| (a.1.edge_count(), &a.0).cmp(&(b.1.edge_count(), &b.0)));
        level = next.into_iter().map(|(_, g)| g).collect();
        all.extend(level.iter().cloned());
    }
    all
}

/// Cycle matroid of a simple graph, elements in edge order.
pub(crate) fn graph_matroid(g: &SimpleGraph) -> Matroid {
    Matroid::graphic(g.labels().to_vec(), g.edges()).expect("graph edges are valid")
}

/// The named fixtures, a few small uniform matroids and direct sums, then
/// `M(G)` for every connected simple graph on at most `max_n` vertices (clamped
/// to [`GRAPH_ORDER_LIMIT`]) with at most 16 edges.
pub fn catalog(max_n: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = [u36(), fano(), w4(), k33_dual(), pabx()]
        .into_iter()
        .map(|m| CatalogEntry {
            name: m.name().expect("fixtures are named").to_string(),
            matroid: m,
            graph: None,
        })
        .collect();
    for n in 0..=5 {
        for r in 0..=n {
            let m = uniform(r, n);
            out.push(CatalogEntry {
                name: m.name().expect("named").to_string(),
                matroid: m,
                graph: None,
            });
        }
    }
    let sums = [
        ("U11+U23", vec![uniform(1, 1), uniform(2, 3)]),
        ("U12+U12", vec![uniform(1, 2), uniform(1, 2)]),
        ("U23+U23", vec![uniform(2, 3), uniform(2, 3)]),
        ("U01+U24", vec![uniform(0, 1), uniform(2, 4)]),
    ];
    for (name, parts) in sums {
        let m = Matroid::direct_sum(parts).expect("disjoint parts").with_name(name);
        out.push(CatalogEntry {
            name: name.to_string(),
            matroid: m,
            graph: None,
        });
    }
    let mut counter = vec![0usize; GRAPH_ORDER_LIMIT + 1];
    for g in connected_graphs(max_n) {
        if g.edge_count() > GRAPH_EDGE_LIMIT {
            continue;
        }
        let n = g.order();
        counter[n] += 1;
        let name = format!("M(G{n}.{})", counter[n]);
        let m = graph_matroid(&g).with_name(name.clone());
        out.push(CatalogEntry {
            name,
            matroid: m,
            graph: Some(g),
        });
    }
    out
}

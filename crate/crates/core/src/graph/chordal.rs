use serde::Serialize;

use super::{SimpleGraph, VertexSet};
use crate::error::{Error, Result};
use crate::trees::{self, has_subtree_property, Tree};
use crate::weighting::Weighting;

/// Largest graph handed to maximal-clique enumeration.
pub const CLIQUE_BOUND: usize = 24;

/// Largest number of maximal cliques for which every clique tree is listed.
pub const CLIQUE_TREE_ENUMERATION_BOUND: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination order.
    Chordal(Vec<usize>),
    /// An induced cycle of length at least four, in cyclic order.
    ChordlessCycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Repeatedly removes a simplicial vertex (least id first).
pub fn is_chordal(g: &SimpleGraph) -> Chordality {
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(g.order());
    while !left.is_empty() {
        let simplicial = left.iter().find(|&v| g.is_clique(g.neighbors(v) & left));
        match simplicial {
            Some(v) => {
                order.push(v);
                left.remove(v);
            }
            None => return Chordality::ChordlessCycle(chordless_cycle(g, left)),
        }
    }
    Chordality::Chordal(order)
}

// A subgraph with no simplicial vertex contains an induced cycle through some v
// and two non-adjacent neighbours a, b, closed by a shortest a-b path that
// avoids the rest of N[v].
fn chordless_cycle(g: &SimpleGraph, within: VertexSet) -> Vec<usize> {
    for v in within {
        let nv = g.neighbors(v) & within;
        for a in nv {
            for b in nv {
                if b <= a || g.has_edge(a, b) {
                    continue;
                }
                let allowed = within - nv.with(v) | VertexSet::singleton(a) | VertexSet::singleton(b);
                if let Some(path) = shortest_path(g, a, b, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return cycle;
                }
            }
        }
    }
    unreachable!("a graph without simplicial vertices has a chordless cycle")
}

fn shortest_path(g: &SimpleGraph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.order()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) & allowed - seen {
            seen.insert(y);
            prev[y] = x;
            queue.push_back(y);
        }
    }
    None
}

/// Maximal cliques by Bron–Kerbosch with pivoting, ordered by
/// `(size, sorted vertex ids)`.
pub fn maximal_cliques(g: &SimpleGraph) -> Result<Vec<VertexSet>> {
    if g.order() > CLIQUE_BOUND {
        return Err(Error::TooLarge {
            what: "graph",
            size: g.order(),
            bound: CLIQUE_BOUND,
        });
    }
    let mut out = Vec::new();
    if g.order() > 0 {
        bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    }
    out.sort_by_cached_key(|c| (c.len(), c.iter().collect::<Vec<_>>()));
    Ok(out)
}

fn bron_kerbosch(g: &SimpleGraph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| ((g.neighbors(u) & p).len(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in p - g.neighbors(pivot) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}

/// `C1 ∩ C2` is non-empty and separates `C1 − C2` from `C2 − C1`.
pub fn is_separating_pair(g: &SimpleGraph, c1: VertexSet, c2: VertexSet) -> bool {
    let common = c1 & c2;
    if common.is_empty() {
        return false;
    }
    let reached = g.reach(c1 - common, g.vertices() - common);
    !reached.intersects(c2 - common)
}

/// The clique graph `C(G)`: maximal cliques, adjacent when they intersect.
pub fn clique_graph(g: &SimpleGraph) -> Result<(Vec<VertexSet>, SimpleGraph)> {
    let cliques = maximal_cliques(g)?;
    let mut cg = SimpleGraph::with_order(cliques.len());
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            if cliques[i].intersects(cliques[j]) {
                cg.add_edge(i, j)?;
            }
        }
    }
    Ok((cliques, cg))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedCliqueGraph {
    pub cliques: Vec<VertexSet>,
    /// `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<u64>,
}

impl ReducedCliqueGraph {
    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.cliques.len(), &self.edges).expect("edges index cliques")
    }
}

/// Maximal cliques joined when they form a separating pair, weighted by
/// `σ(C ∩ C′)`.
pub fn reduced_clique_graph(g: &SimpleGraph, sigma: &Weighting) -> Result<ReducedCliqueGraph> {
    if !is_chordal(g).is_chordal() {
        return Err(Error::NotChordal);
    }
    let cliques = maximal_cliques(g)?;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            if is_separating_pair(g, cliques[i], cliques[j]) {
                edges.push((i, j));
                weights.push(sigma.weigh_set(cliques[i] & cliques[j])?);
            }
        }
    }
    Ok(ReducedCliqueGraph { cliques, edges, weights })
}

/// A clique tree: node `t` carries `cliques[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    pub tree: Tree,
}

/// Clique trees of a connected chordal graph, as spanning trees of `C_R(G)`
/// with the subtree property. With more than
/// [`CLIQUE_TREE_ENUMERATION_BOUND`] cliques only the deterministic
/// maximum-weight tree is returned.
pub fn clique_trees(g: &SimpleGraph) -> Result<Vec<CliqueTree>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rcg = reduced_clique_graph(g, &Weighting::Cardinality)?;
    let k = rcg.cliques.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let build = |picked: &[usize]| -> Result<CliqueTree> {
        Ok(CliqueTree {
            cliques: rcg.cliques.clone(),
            tree: trees::tree_from_edges(k, &rcg.edges, picked)?,
        })
    };
    if k > CLIQUE_TREE_ENUMERATION_BOUND {
        let picked = trees::max_weight_spanning_tree(k, &rcg.edges, &rcg.weights)
            .ok_or_else(|| Error::Invariant("reduced clique graph of a connected chordal graph is disconnected".into()))?;
        let t = build(&picked)?;
        if !has_subtree_property(&t.tree, &t.cliques) {
            return Err(Error::Invariant("maximum-weight spanning tree is not a clique tree".into()));
        }
        return Ok(vec![t]);
    }
    let all = trees::spanning_trees(k, &rcg.edges);
    let mut out = Vec::new();
    let mut picked_sets = Vec::new();
    for picked in &all {
        let t = build(picked)?;
        if has_subtree_property(&t.tree, &t.cliques) {
            picked_sets.push(picked.clone());
            out.push(t);
        }
    }
    if picked_sets != trees::max_weight_spanning_trees(k, &rcg.edges, &rcg.weights) {
        return Err(Error::Invariant(
            "clique trees differ from the maximum-weight spanning trees".into(),
        ));
    }
    Ok(out)
}

/// Largest bag of an optimal tree-decomposition of a chordal graph, i.e. the
/// largest clique. Bag size is reported as is, without subtracting one.
pub fn graph_tree_width(g: &SimpleGraph) -> Result<usize> {
    if !is_chordal(g).is_chordal() {
        return Err(Error::NotChordal);
    }
    Ok(maximal_cliques(g)?.iter().map(|c| c.len()).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    fn diamond() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn star(leaves: usize) -> SimpleGraph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        SimpleGraph::from_edges(leaves + 1, &e).unwrap()
    }

    fn is_peo(g: &SimpleGraph, order: &[usize]) -> bool {
        let mut left = g.vertices();
        order.iter().all(|&v| {
            let ok = g.is_clique(g.neighbors(v) & left);
            left.remove(v);
            ok
        })
    }

    #[test]
    fn chordality_and_witnesses() {
        match is_chordal(&SimpleGraph::cycle(4)) {
            Chordality::ChordlessCycle(c) => assert_eq!(c.len(), 4),
            other => panic!("{other:?}"),
        }
        for g in [diamond(), star(3), SimpleGraph::path(5), SimpleGraph::complete(5)] {
            match is_chordal(&g) {
                Chordality::Chordal(order) => assert!(is_peo(&g, &order)),
                other => panic!("{other:?}"),
            }
        }
        // C6 with one chord still has an induced C4
        let mut g = SimpleGraph::cycle(6);
        g.add_edge(0, 3).unwrap();
        let Chordality::ChordlessCycle(c) = is_chordal(&g) else { panic!() };
        assert_eq!(c.len(), 4);
        let set: VertexSet = c.iter().collect();
        assert_eq!(g.induced(set).edge_count(), 4);
    }

    #[test]
    fn maximal_cliques_examples() {
        assert_eq!(maximal_cliques(&SimpleGraph::path(3)).unwrap(), vec![vs(&[0, 1]), vs(&[1, 2])]);
        assert_eq!(maximal_cliques(&diamond()).unwrap(), vec![vs(&[0, 1, 2]), vs(&[1, 2, 3])]);
        assert_eq!(maximal_cliques(&SimpleGraph::complete(5)).unwrap(), vec![vs(&[0, 1, 2, 3, 4])]);
        assert_eq!(maximal_cliques(&SimpleGraph::with_order(2)).unwrap(), vec![vs(&[0]), vs(&[1])]);
        assert!(maximal_cliques(&SimpleGraph::with_order(25)).is_err());
    }

    #[test]
    fn maximal_cliques_match_brute_force() {
        let g = SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 4), (1, 3)]).unwrap();
        let brute: Vec<VertexSet> = g
            .vertices()
            .subsets()
            .filter(|&s| !s.is_empty() && g.is_clique(s))
            .filter(|&s| (g.vertices() - s).iter().all(|v| !g.is_clique(s.with(v))))
            .collect();
        let mut found = maximal_cliques(&g).unwrap();
        found.sort();
        let mut brute = brute;
        brute.sort();
        assert_eq!(found, brute);
    }

    #[test]
    fn separating_pairs() {
        assert!(is_separating_pair(&SimpleGraph::path(3), vs(&[0, 1]), vs(&[1, 2])));
        assert!(is_separating_pair(&diamond(), vs(&[0, 1, 2]), vs(&[1, 2, 3])));
        let two = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_separating_pair(&two, vs(&[0, 1, 2]), vs(&[3, 4, 5])));
    }

    #[test]
    fn reduced_clique_graphs() {
        let r = reduced_clique_graph(&SimpleGraph::path(3), &Weighting::Cardinality).unwrap();
        assert_eq!((r.edges.clone(), r.weights.clone()), (vec![(0, 1)], vec![1]));
        let r = reduced_clique_graph(&diamond(), &Weighting::Cardinality).unwrap();
        assert_eq!(r.weights, vec![2]);
        let r = reduced_clique_graph(&SimpleGraph::complete(4), &Weighting::Cardinality).unwrap();
        assert_eq!((r.cliques.len(), r.edges.len()), (1, 0));
        assert_eq!(reduced_clique_graph(&SimpleGraph::cycle(4), &Weighting::Cardinality), Err(Error::NotChordal));
    }

    #[test]
    fn clique_tree_examples() {
        assert_eq!(clique_trees(&SimpleGraph::path(3)).unwrap().len(), 1);
        let k4 = clique_trees(&SimpleGraph::complete(4)).unwrap();
        assert_eq!((k4.len(), k4[0].tree.order()), (1, 1));
        // C_R of K_{1,3} is a triangle and all three spanning trees qualify
        assert_eq!(clique_trees(&star(3)).unwrap().len(), 3);
        assert_eq!(clique_trees(&SimpleGraph::with_order(2)), Err(Error::Disconnected));
    }

    #[test]
    fn tree_width_is_largest_bag() {
        assert_eq!(graph_tree_width(&SimpleGraph::complete(4)).unwrap(), 4);
        assert_eq!(graph_tree_width(&star(3)).unwrap(), 2);
        assert_eq!(graph_tree_width(&diamond()).unwrap(), 3);
        assert!(graph_tree_width(&SimpleGraph::cycle(5)).is_err());
    }
}

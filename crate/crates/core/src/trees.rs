//! Trees on `0..n`, spanning-tree enumeration, deterministic maximum-weight
//! spanning trees and the subtree (running-intersection) property.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, SimpleGraph};

/// A tree on nodes `0..order`. Edges are stored as `(u, v)` with `u < v`,
/// sorted, so equal trees compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tree {
    order: usize,
    edges: Vec<(usize, usize)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl Tree {
    pub fn new(order: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidDecomposition("a tree needs at least one node".into()));
        }
        if edges.len() + 1 != order {
            return Err(Error::InvalidDecomposition(format!(
                "{} edges cannot form a tree on {order} nodes",
                edges.len()
            )));
        }
        let mut uf = UnionFind::new(order);
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidDecomposition(format!("edge ({u}, {v}) leaves 0..{order}")));
            }
            if !uf.union(u, v) {
                return Err(Error::InvalidDecomposition(format!("edge ({u}, {v}) closes a cycle")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(Tree { order, edges: norm })
    }

    pub fn single() -> Self {
        Tree {
            order: 1,
            edges: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, t: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(u, v)| match (u == t, v == t) {
                (true, _) => Some(v),
                (_, true) => Some(u),
                _ => None,
            })
            .collect()
    }

    pub fn degree(&self, t: usize) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == t || v == t).count()
    }

    /// Nodes reachable from `start` without using the nodes in `blocked`.
    fn reach(&self, start: usize, blocked: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        for &b in blocked {
            seen[b] = true;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = vec![start];
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Node sets of the components of `T - t`, one per neighbour of `t`.
    pub fn branches(&self, t: usize) -> Vec<Vec<usize>> {
        self.neighbors(t).into_iter().map(|n| self.reach(n, &[t])).collect()
    }

    /// The two sides of `T - e` for the edge `e = (u, v)`: `(side of u, side of v)`.
    pub fn split(&self, edge: (usize, usize)) -> Result<(Vec<usize>, Vec<usize>)> {
        let (u, v) = edge;
        if !self.edges.contains(&(u.min(v), u.max(v))) {
            return Err(Error::InvalidDecomposition(format!("({u}, {v}) is not a tree edge")));
        }
        Ok((self.reach(u, &[v]), self.reach(v, &[u])))
    }

    /// Whether the nodes in `nodes` induce a connected subtree (true when empty).
    pub fn induces_subtree(&self, nodes: &[usize]) -> bool {
        let Some(&first) = nodes.first() else {
            return true;
        };
        let inside: HashSet<usize> = nodes.iter().copied().collect();
        let blocked: Vec<usize> = (0..self.order).filter(|t| !inside.contains(t)).collect();
        self.reach(first, &blocked).len() == inside.len()
    }

    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.order, &self.edges).expect("tree edges are valid")
    }

    /// Decodes a Prüfer sequence over `0..seq.len() + 2`.
    pub fn from_prufer(seq: &[usize]) -> Tree {
        let n = seq.len() + 2;
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &x in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
            edges.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        Tree::new(n, edges).expect("Prüfer decoding yields a tree")
    }
}

/// For every element in the union of the bags, the nodes whose bag contains
/// it induce a subtree.
pub fn has_subtree_property(tree: &Tree, bags: &[ElementSet]) -> bool {
    first_subtree_violation(tree, bags).is_none()
}

/// An element whose bags do not induce a subtree, if any.
pub fn first_subtree_violation(tree: &Tree, bags: &[ElementSet]) -> Option<usize> {
    let all = bags.iter().fold(ElementSet::EMPTY, |a, &b| a | b);
    all.iter().find(|&x| {
        let nodes: Vec<usize> = (0..bags.len()).filter(|&t| bags[t].contains(x)).collect();
        !tree.induces_subtree(&nodes)
    })
}

/// All labelled trees on `0..n`, in Prüfer order.
pub fn labeled_trees(n: usize) -> Vec<Tree> {
    match n {
        0 => Vec::new(),
        1 => vec![Tree::single()],
        2 => vec![Tree::new(2, vec![(0, 1)]).expect("an edge is a tree")],
        _ => {
            let len = n - 2;
            let total = n.pow(len as u32);
            (0..total)
                .map(|mut code| {
                    let seq: Vec<usize> = (0..len)
                        .map(|_| {
                            let d = code % n;
                            code /= n;
                            d
                        })
                        .collect();
                    Tree::from_prufer(&seq)
                })
                .collect()
        }
    }
}

/// One labelled representative of each isomorphism class of trees on `n` nodes.
pub fn unlabeled_trees(n: usize) -> Vec<Tree> {
    let mut seen = HashSet::new();
    labeled_trees(n)
        .into_iter()
        .filter(|t| seen.insert(canonical_form(&t.to_graph())))
        .collect()
}

/// Spanning trees of the multigraph `(order, edges)`, each given as a sorted
/// list of edge indices. Empty when the graph is disconnected.
pub fn spanning_trees(order: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    if order == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(order.saturating_sub(1));
    grow(order, edges, 0, &UnionFindState::new(order), &mut chosen, &mut out);
    out
}

#[derive(Clone)]
struct UnionFindState(Vec<usize>);

impl UnionFindState {
    fn new(n: usize) -> Self {
        UnionFindState((0..n).collect())
    }

    fn root(&self, mut a: usize) -> usize {
        while self.0[a] != a {
            a = self.0[a];
        }
        a
    }
}

fn grow(
    order: usize,
    edges: &[(usize, usize)],
    next: usize,
    uf: &UnionFindState,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() + 1 == order {
        out.push(chosen.clone());
        return;
    }
    if edges.len() - next < order - 1 - chosen.len() {
        return;
    }
    let (u, v) = edges[next];
    let (ru, rv) = (uf.root(u), uf.root(v));
    if ru != rv {
        let mut with = uf.clone();
        with.0[ru] = rv;
        chosen.push(next);
        grow(order, edges, next + 1, &with, chosen, out);
        chosen.pop();
    }
    grow(order, edges, next + 1, uf, chosen, out);
}

/// Kruskal with ties broken by edge index: edges are scanned by
/// `(weight desc, index asc)`. Returns sorted edge indices, or `None` when the
/// graph is disconnected.
pub fn max_weight_spanning_tree(order: usize, edges: &[(usize, usize)], weights: &[u64]) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = (0..edges.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(weights[i]), i));
    let mut uf = UnionFind::new(order);
    let mut picked: Vec<usize> = idx.into_iter().filter(|&i| uf.union(edges[i].0, edges[i].1)).collect();
    if picked.len() + 1 != order.max(1) {
        return None;
    }
    picked.sort_unstable();
    Some(picked)
}

pub fn tree_weight(tree: &[usize], weights: &[u64]) -> u64 {
    tree.iter().map(|&i| weights[i]).sum()
}

/// Every spanning tree of maximum total weight.
pub fn max_weight_spanning_trees(order: usize, edges: &[(usize, usize)], weights: &[u64]) -> Vec<Vec<usize>> {
    let all = spanning_trees(order, edges);
    let best = all.iter().map(|t| tree_weight(t, weights)).max();
    all.into_iter()
        .filter(|t| Some(tree_weight(t, weights)) == best)
        .collect()
}

/// The tree on `0..order` formed by the given edge indices.
pub fn tree_from_edges(order: usize, edges: &[(usize, usize)], picked: &[usize]) -> Result<Tree> {
    Tree::new(order, picked.iter().map(|&i| edges[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_counts() {
        for n in 1..=6 {
            let trees = labeled_trees(n);
            assert_eq!(trees.len(), n.pow(n.saturating_sub(2) as u32));
            let distinct: HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
        }
        let unlabeled: Vec<usize> = (1..=7).map(|n| unlabeled_trees(n).len()).collect();
        assert_eq!(unlabeled, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn spanning_trees_of_complete_graphs() {
        for n in 1..=6usize {
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            assert_eq!(spanning_trees(n, &edges).len(), n.pow(n.saturating_sub(2) as u32));
        }
        assert!(spanning_trees(3, &[(0, 1)]).is_empty());
    }

    #[test]
    fn kruskal_prefers_heavy_edges_then_low_ids() {
        let edges = [(0, 1), (1, 2), (0, 2)];
        assert_eq!(max_weight_spanning_tree(3, &edges, &[1, 2, 2]), Some(vec![1, 2]));
        assert_eq!(max_weight_spanning_tree(3, &edges, &[1, 1, 1]), Some(vec![0, 1]));
        assert_eq!(max_weight_spanning_trees(3, &edges, &[1, 1, 1]).len(), 3);
        assert_eq!(max_weight_spanning_tree(3, &[(0, 1)], &[1]), None);
    }

    #[test]
    fn subtree_property_on_a_path() {
        let path = Tree::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let s = |ids: &[usize]| -> ElementSet { ids.iter().collect() };
        assert!(has_subtree_property(&path, &[s(&[0, 1]), s(&[1, 2]), s(&[2, 3])]));
        // element 0 skips the middle bag
        assert_eq!(first_subtree_violation(&path, &[s(&[0]), s(&[1]), s(&[0])]), Some(0));
    }

    #[test]
    fn branches_and_splits() {
        let star = Tree::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.branches(0), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(star.branches(1), vec![vec![0, 2, 3]]);
        assert_eq!(star.split((0, 2)).unwrap(), (vec![0, 1, 3], vec![2]));
        assert!(star.split((1, 2)).is_err());
        assert!(Tree::new(3, vec![(0, 1), (1, 0)]).is_err());
    }
}

//! Rotunda graphs, rotunda trees and the covers they induce.

use rayon::prelude::*;

use crate::bitset::ElementSet;
use crate::classification::{is_saturated, is_supersolvable};
use crate::error::{Error, Result};
use crate::matroid::{AsView, Flat, Restriction};
use crate::modularity::{is_modular_flat, modular_flats, ModularCover};
use crate::roundness::{rotunda, Rotunda};
use crate::trees::{self, first_subtree_violation, Tree};
use crate::weighting::Weighting;

/// Largest number of rotunda for which every rotunda tree is listed.
pub const ROTUNDA_TREE_ENUMERATION_BOUND: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RotundaEdge {
    pub i: usize,
    pub j: usize,
    pub weight: u64,
    /// `first ⊇ R_i`, `second ⊇ R_j`, `first ∩ second = R_i ∩ R_j`.
    pub cover: ModularCover,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotundaGraph {
    pub rotunda: Vec<Rotunda>,
    /// Sorted by `(i, j)`.
    pub edges: Vec<RotundaEdge>,
}

impl RotundaGraph {
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.i, e.j)).collect()
    }

    pub fn weights(&self) -> Vec<u64> {
        self.edges.iter().map(|e| e.weight).collect()
    }

    pub fn to_graph(&self) -> crate::graph::SimpleGraph {
        crate::graph::SimpleGraph::from_edges(self.rotunda.len(), &self.edge_pairs()).expect("edges index rotunda")
    }
}

/// A spanning tree of the rotunda graph whose bags satisfy the subtree
/// property; node `t` carries `rotunda[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotundaTree {
    pub rotunda: Vec<Rotunda>,
    pub tree: Tree,
}

impl RotundaTree {
    pub fn bags(&self) -> Vec<ElementSet> {
        self.rotunda.iter().map(|r| r.elements).collect()
    }
}

pub(crate) fn require_supersolvable_saturated(v: &Restriction<'_>) -> Result<()> {
    if !is_supersolvable(v)? {
        return Err(Error::Hypothesis("the matroid is not supersolvable".into()));
    }
    if !is_saturated(v)? {
        return Err(Error::Hypothesis("the matroid is not saturated".into()));
    }
    Ok(())
}

/// The first certifying cover for the pair `(a, b)` in `(rank, bitset)` order.
fn certificate(v: &Restriction<'_>, modular: &[Flat], a: ElementSet, b: ElementSet) -> Option<ModularCover> {
    let ground = v.ground();
    let meet = a & b;
    modular
        .iter()
        .filter(|f| a.is_subset(f.elements))
        .find_map(|f1| {
            modular
                .iter()
                .filter(|f| b.is_subset(f.elements))
                .find(|f2| f1.elements | f2.elements == ground && f1.elements & f2.elements == meet)
                .map(|f2| ModularCover { first: *f1, second: *f2 })
        })
}

/// Weight of a rotunda intersection; loops are dropped first.
fn intersection_weight(v: &Restriction<'_>, sigma: &Weighting, x: ElementSet) -> Result<u64> {
    sigma.weigh(v.matroid(), x - v.loops())
}

/// `R(M)`: rotunda joined when a modular cover certifies their adjacency,
/// weighted by `σ(R ∩ R′)`.
pub fn rotunda_graph<V: AsView + ?Sized>(m: &V, sigma: &Weighting) -> Result<RotundaGraph> {
    let v = m.as_view();
    require_supersolvable_saturated(&v)?;
    let rot = rotunda(&v)?;
    let modular = modular_flats(&v)?;
    let loops = v.loops();
    let pairs: Vec<(usize, usize)> = (0..rot.len())
        .flat_map(|i| (i + 1..rot.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| !(rot[i].elements & rot[j].elements - loops).is_empty())
        .collect();
    let found: Vec<Option<(usize, usize, ModularCover)>> = pairs
        .par_iter()
        .map(|&(i, j)| certificate(&v, &modular, rot[i].elements, rot[j].elements).map(|c| (i, j, c)))
        .collect();
    let mut edges = Vec::new();
    for (i, j, cover) in found.into_iter().flatten() {
        let weight = intersection_weight(&v, sigma, rot[i].elements & rot[j].elements)?;
        edges.push(RotundaEdge { i, j, weight, cover });
    }
    let domain: Vec<ElementSet> = edges
        .iter()
        .map(|e| rot[e.i].elements & rot[e.j].elements - loops)
        .collect();
    sigma.check_legitimate(&domain, |x| sigma.weigh(v.matroid(), x))?;
    Ok(RotundaGraph { rotunda: rot, edges })
}

/// Checks that `tau` lists exactly the rotunda and that `(tree, tau)` has the
/// subtree property and covers every element.
pub fn is_rotunda_tree<V: AsView + ?Sized>(m: &V, tree: &Tree, tau: &[Rotunda]) -> Result<bool> {
    let v = m.as_view();
    let mut given: Vec<Flat> = tau.to_vec();
    given.sort();
    if given.windows(2).any(|w| w[0] == w[1]) || given != rotunda(&v)? || tree.order() != tau.len() {
        return Err(Error::InvalidDecomposition(
            "the node labels are not a bijection onto the rotunda".into(),
        ));
    }
    let bags: Vec<ElementSet> = tau.iter().map(|r| r.elements).collect();
    let covered = bags.iter().fold(ElementSet::EMPTY, |a, &b| a | b);
    Ok(covered == v.ground() && first_subtree_violation(tree, &bags).is_none())
}

fn require_connected(v: &Restriction<'_>) -> Result<()> {
    if v.is_connected()? {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Every rotunda tree of a connected supersolvable saturated matroid, checked
/// against the maximum-weight spanning trees of `R(M)`.
pub fn rotunda_trees<V: AsView + ?Sized>(m: &V, sigma: &Weighting) -> Result<Vec<RotundaTree>> {
    let v = m.as_view();
    require_connected(&v)?;
    let rg = rotunda_graph(&v, sigma)?;
    let k = rg.rotunda.len();
    if k > ROTUNDA_TREE_ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            what: "rotunda list",
            size: k,
            bound: ROTUNDA_TREE_ENUMERATION_BOUND,
        });
    }
    let pairs = rg.edge_pairs();
    let weights = rg.weights();
    let mut out = Vec::new();
    let mut picked_sets = Vec::new();
    for picked in trees::spanning_trees(k, &pairs) {
        let tree = trees::tree_from_edges(k, &pairs, &picked)?;
        if is_rotunda_tree(&v, &tree, &rg.rotunda)? {
            out.push(RotundaTree {
                rotunda: rg.rotunda.clone(),
                tree,
            });
            picked_sets.push(picked);
        }
    }
    if picked_sets != trees::max_weight_spanning_trees(k, &pairs, &weights) {
        return Err(Error::Invariant(
            "rotunda trees differ from the maximum-weight spanning trees".into(),
        ));
    }
    Ok(out)
}

/// One rotunda tree via deterministic Kruskal on `R(M)`; no enumeration bound
/// on the number of rotunda.
pub fn rotunda_tree<V: AsView + ?Sized>(m: &V, sigma: &Weighting) -> Result<RotundaTree> {
    let v = m.as_view();
    require_connected(&v)?;
    let rg = rotunda_graph(&v, sigma)?;
    let k = rg.rotunda.len();
    let pairs = rg.edge_pairs();
    let picked = trees::max_weight_spanning_tree(k, &pairs, &rg.weights())
        .ok_or_else(|| Error::Invariant("the rotunda graph of a connected matroid is disconnected".into()))?;
    let tree = trees::tree_from_edges(k, &pairs, &picked)?;
    if !is_rotunda_tree(&v, &tree, &rg.rotunda)? {
        return Err(Error::Invariant("maximum-weight spanning tree is not a rotunda tree".into()));
    }
    Ok(RotundaTree {
        rotunda: rg.rotunda,
        tree,
    })
}

/// For a tree edge `(u1, u2)`, the unions of bags on either side. They form a
/// modular cover meeting in `τ(u1) ∩ τ(u2)`; any failure is reported as an
/// invariant violation.
pub fn modular_cover_of_tree_edge<V: AsView + ?Sized>(m: &V, rt: &RotundaTree, edge: (usize, usize)) -> Result<ModularCover> {
    let v = m.as_view();
    let (left, right) = rt.tree.split(edge)?;
    let union = |side: &[usize]| side.iter().fold(ElementSet::EMPTY, |a, &t| a | rt.rotunda[t].elements);
    let (f1, f2) = (union(&left), union(&right));
    let name = |s: ElementSet| v.matroid().format_set(s);
    for f in [f1, f2] {
        if !v.is_flat(f) {
            return Err(Error::Invariant(format!("{} is not a flat", name(f))));
        }
        if !is_modular_flat(&v, f)? {
            return Err(Error::Invariant(format!("{} is not modular", name(f))));
        }
        if f == v.ground() {
            return Err(Error::Invariant(format!("{} is not proper", name(f))));
        }
    }
    if f1 | f2 != v.ground() {
        return Err(Error::Invariant("the two sides do not cover the ground set".into()));
    }
    let meet = rt.rotunda[edge.0].elements & rt.rotunda[edge.1].elements;
    if f1 & f2 != meet {
        return Err(Error::Invariant(format!(
            "sides meet in {}, not in {}",
            name(f1 & f2),
            name(meet)
        )));
    }
    Ok(ModularCover {
        first: Flat::new(f1, v.rank(f1)),
        second: Flat::new(f2, v.rank(f2)),
    })
}

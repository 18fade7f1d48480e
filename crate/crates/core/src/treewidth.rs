//! Matroid tree-decompositions, node-width and tree-width.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::{ensure_bound, AsView, Restriction};
use crate::rotunda_graph::{require_supersolvable_saturated, rotunda_tree};
use crate::roundness::{round_flats, rotunda};
use crate::trees::{unlabeled_trees, Tree};
use crate::weighting::Weighting;

/// Largest ground set accepted by [`brute_force_treewidth`].
pub const BRUTE_FORCE_ELEMENT_BOUND: usize = 6;

/// A tree with a bag of elements on every node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub tree: Tree,
    pub bags: Vec<ElementSet>,
}

impl TreeDecomposition {
    pub fn new(tree: Tree, bags: Vec<ElementSet>) -> Result<Self> {
        if bags.len() != tree.order() {
            return Err(Error::InvalidDecomposition(format!(
                "{} bags for {} nodes",
                bags.len(),
                tree.order()
            )));
        }
        Ok(TreeDecomposition { tree, bags })
    }

    /// Everything in one node.
    pub fn trivial(ground: ElementSet) -> Self {
        TreeDecomposition {
            tree: Tree::single(),
            bags: vec![ground],
        }
    }

    /// Every element lies in exactly one bag.
    pub fn is_strict(&self) -> bool {
        let mut seen = ElementSet::EMPTY;
        for &b in &self.bags {
            if seen.intersects(b) {
                return false;
            }
            seen = seen | b;
        }
        true
    }

    fn covered(&self) -> ElementSet {
        self.bags.iter().fold(ElementSet::EMPTY, |a, &b| a | b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WidthReport {
    pub node_widths: Vec<i64>,
    pub width: i64,
}

fn check_covers(v: &Restriction<'_>, td: &TreeDecomposition) -> Result<()> {
    let missing = v.ground() - td.covered();
    if let Some(e) = missing.first() {
        return Err(Error::InvalidDecomposition(format!(
            "element {} lies in no bag",
            v.matroid().label(e)
        )));
    }
    if !td.covered().is_subset(v.ground()) {
        return Err(Error::InvalidDecomposition("a bag holds elements outside the ground set".into()));
    }
    Ok(())
}

// `Σ_i r(τ(t) ∪ ⋃_{k≠i} F_k) − (d − 1) r(M)` with the `F_k` already unioned.
fn width_from_parts(v: &Restriction<'_>, bag: ElementSet, parts: &[ElementSet]) -> i64 {
    let d = parts.len() as i64;
    let sum: i64 = (0..parts.len())
        .map(|i| {
            let others = parts
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .fold(bag, |a, (_, &p)| a | p);
            v.rank(others) as i64
        })
        .sum();
    sum - (d - 1) * v.full_rank() as i64
}

/// Node-width of `t`. An isolated node has width `r(M)`.
pub fn node_width<V: AsView + ?Sized>(m: &V, td: &TreeDecomposition, t: usize) -> Result<i64> {
    let v = m.as_view();
    if t >= td.tree.order() {
        return Err(Error::InvalidDecomposition(format!("node {t} is not in the tree")));
    }
    check_covers(&v, td)?;
    let parts: Vec<ElementSet> = td
        .tree
        .branches(t)
        .iter()
        .map(|side| side.iter().fold(ElementSet::EMPTY, |a, &s| a | td.bags[s]))
        .collect();
    Ok(width_from_parts(&v, td.bags[t], &parts))
}

pub fn width<V: AsView + ?Sized>(m: &V, td: &TreeDecomposition) -> Result<WidthReport> {
    let v = m.as_view();
    check_covers(&v, td)?;
    let node_widths = (0..td.tree.order())
        .map(|t| node_width(&v, td, t))
        .collect::<Result<Vec<_>>>()?;
    let width = node_widths.iter().copied().max().expect("trees have a node");
    Ok(WidthReport { node_widths, width })
}

/// Tree-width by exhaustion: every tree shape on `1..=|E|` nodes and every
/// strict bag assignment, empty bags allowed.
pub fn brute_force_treewidth<V: AsView + ?Sized>(m: &V) -> Result<i64> {
    let v = m.as_view();
    ensure_bound("ground set", v.size(), BRUTE_FORCE_ELEMENT_BOUND)?;
    Ok(min_strict_width(&v, 1..=v.size().max(1)))
}

/// Minimum width over strict decompositions on trees with node counts in `sizes`.
pub fn min_strict_width(v: &Restriction<'_>, sizes: impl IntoIterator<Item = usize>) -> i64 {
    let elements: Vec<usize> = v.ground().iter().collect();
    let n = elements.len();
    let shapes: Vec<Tree> = sizes.into_iter().flat_map(unlabeled_trees).collect();
    shapes
        .par_iter()
        .map(|tree| {
            let k = tree.order();
            let branches: Vec<Vec<Vec<usize>>> = (0..k).map(|t| tree.branches(t)).collect();
            let total = (k as u64).pow(n as u32);
            let mut best = i64::MAX;
            let mut bags = vec![ElementSet::EMPTY; k];
            for mut code in 0..total {
                bags.iter_mut().for_each(|b| *b = ElementSet::EMPTY);
                for &e in &elements {
                    bags[(code % k as u64) as usize].insert(e);
                    code /= k as u64;
                }
                let mut w = i64::MIN;
                for t in 0..k {
                    let parts: Vec<ElementSet> = branches[t]
                        .iter()
                        .map(|side| side.iter().fold(ElementSet::EMPTY, |a, &s| a | bags[s]))
                        .collect();
                    w = w.max(width_from_parts(v, bags[t], &parts));
                    if w >= best {
                        break;
                    }
                }
                best = best.min(w);
            }
            best
        })
        .min()
        .expect("at least one tree shape")
}

/// `max r(R)` over the rotunda of a connected supersolvable saturated matroid.
/// A rotunda tree is built and its width is checked against this value.
pub fn rotunda_treewidth<V: AsView + ?Sized>(m: &V) -> Result<i64> {
    let v = m.as_view();
    require_supersolvable_saturated(&v)?;
    let value = rotunda(&v)?.iter().map(|r| r.rank as i64).max().unwrap_or(0);
    let rt = rotunda_tree(&v, &Weighting::Rank)?;
    let td = TreeDecomposition::new(rt.tree.clone(), rt.bags())?;
    let report = width(&v, &td)?;
    if report.width != value {
        return Err(Error::Invariant(format!(
            "rotunda tree has width {} but the largest rotunda has rank {value}",
            report.width
        )));
    }
    Ok(value)
}

/// `max r(R)` over round flats, a lower bound for tree-width.
pub fn round_flat_lower_bound<V: AsView + ?Sized>(m: &V) -> Result<i64> {
    Ok(round_flats(m)?.iter().map(|f| f.rank as i64).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{fano, pabx, u36, Matroid};
    use crate::rotunda_graph::rotunda_tree;

    fn graphic(n: usize, edges: &[(usize, usize)]) -> Matroid {
        Matroid::graphic((0..n).map(|i| i.to_string()).collect(), edges.to_vec()).unwrap()
    }

    fn diamond() -> Matroid {
        graphic(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    fn k(n: usize) -> Matroid {
        graphic(n, &(0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>())
    }

    #[test]
    fn node_width_conventions() {
        let u = u36();
        let single = TreeDecomposition::trivial(u.ground());
        assert_eq!(node_width(&u, &single, 0).unwrap(), 3);
        assert_eq!(width(&u, &single).unwrap().width, 3);
        // a leaf has width r(τ(t))
        let path = Tree::new(2, vec![(0, 1)]).unwrap();
        let td = TreeDecomposition::new(path, vec![u.set(&["a", "b"]).unwrap(), u.set(&["c", "d", "e", "f"]).unwrap()]).unwrap();
        assert_eq!(node_width(&u, &td, 0).unwrap(), 2);
        assert!(matches!(node_width(&u, &td, 2), Err(Error::InvalidDecomposition(_))));
        let gap = TreeDecomposition::new(Tree::single(), vec![u.set(&["a"]).unwrap()]).unwrap();
        assert!(matches!(width(&u, &gap), Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn width_examples() {
        let d = diamond();
        let rt = rotunda_tree(&d, &Weighting::Rank).unwrap();
        let td = TreeDecomposition::new(rt.tree.clone(), rt.bags()).unwrap();
        assert_eq!(width(&d, &td).unwrap(), WidthReport { node_widths: vec![2, 2], width: 2 });
        let p = graphic(3, &[(0, 1), (1, 2)]);
        let td = TreeDecomposition::new(Tree::new(2, vec![(0, 1)]).unwrap(), vec![ElementSet::singleton(0), ElementSet::singleton(1)]).unwrap();
        assert_eq!(width(&p, &td).unwrap().width, 1);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_treewidth(&u36()).unwrap(), 3);
        assert_eq!(brute_force_treewidth(&k(4)).unwrap(), 3);
        assert_eq!(brute_force_treewidth(&diamond()).unwrap(), 2);
        assert!(matches!(brute_force_treewidth(&fano()), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn rotunda_treewidth_examples() {
        assert_eq!(rotunda_treewidth(&diamond()).unwrap(), 2);
        for n in 2..=5 {
            assert_eq!(rotunda_treewidth(&k(n)).unwrap(), n as i64 - 1);
        }
        assert_eq!(rotunda_treewidth(&fano()).unwrap(), 3);
        assert!(matches!(rotunda_treewidth(&u36()), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(round_flat_lower_bound(&u36()).unwrap(), 3);
        assert_eq!(round_flat_lower_bound(&graphic(3, &[(0, 1), (1, 2)])).unwrap(), 1);
        assert_eq!(round_flat_lower_bound(&pabx()).unwrap(), 3);
    }

    #[test]
    fn larger_trees_do_not_lower_the_width() {
        // extra nodes can only hold empty bags; small ground sets, two spare nodes
        for m in [diamond(), Matroid::uniform(2, 4).unwrap(), graphic(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])] {
            if m.size() > 5 {
                continue;
            }
            let v = m.view();
            let base = min_strict_width(&v, 1..=m.size());
            let wide = min_strict_width(&v, 1..=m.size() + 2);
            assert_eq!(base, wide);
        }
    }
}

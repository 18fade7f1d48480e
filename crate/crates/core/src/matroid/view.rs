use std::collections::HashSet;
use std::sync::Arc;

use super::{ensure_enumerable, Flat, Matroid};
use crate::bitset::ElementSet;
use crate::error::Result;

/// The restriction `M|X` of a matroid to a subset of its ground set.
///
/// Ranks are read from the parent matroid, so flats of the restriction are the
/// sets `cl_M(Y) ∩ X`. When `X` is itself a flat of `M`, the flats of `M|X` are
/// exactly the flats of `M` contained in `X`.
#[derive(Clone, Copy)]
pub struct Restriction<'a> {
    matroid: &'a Matroid,
    ground: ElementSet,
}

/// Anything that can be viewed as a (restricted) matroid.
pub trait AsView {
    fn as_view(&self) -> Restriction<'_>;
}

impl AsView for Matroid {
    fn as_view(&self) -> Restriction<'_> {
        self.view()
    }
}

impl AsView for Restriction<'_> {
    fn as_view(&self) -> Restriction<'_> {
        *self
    }
}

impl std::fmt::Debug for Restriction<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}|{}", self.matroid.name().unwrap_or("M"), self.matroid.format_set(self.ground))
    }
}

impl<'a> Restriction<'a> {
    pub(crate) fn new(matroid: &'a Matroid, ground: ElementSet) -> Self {
        Restriction { matroid, ground }
    }

    pub fn matroid(&self) -> &'a Matroid {
        self.matroid
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    /// Further restriction to `x ∩ ground`.
    pub fn restrict(&self, x: ElementSet) -> Restriction<'a> {
        Restriction::new(self.matroid, x & self.ground)
    }

    #[inline]
    pub fn rank(&self, x: ElementSet) -> usize {
        self.matroid.rank(x & self.ground)
    }

    pub fn full_rank(&self) -> usize {
        self.matroid.rank(self.ground)
    }

    pub fn closure(&self, x: ElementSet) -> ElementSet {
        let x = x & self.ground;
        let r = self.rank(x);
        let mut cl = x;
        for e in self.ground - x {
            if self.rank(x.with(e)) == r {
                cl.insert(e);
            }
        }
        cl
    }

    pub fn is_flat(&self, x: ElementSet) -> bool {
        x.is_subset(self.ground) && self.closure(x) == x
    }

    pub fn loops(&self) -> ElementSet {
        self.closure(ElementSet::EMPTY)
    }

    pub fn is_spanning(&self, x: ElementSet) -> bool {
        self.rank(x) == self.full_rank()
    }

    pub fn flat(&self, x: ElementSet) -> Flat {
        let cl = self.closure(x);
        Flat::new(cl, self.rank(cl))
    }

    /// Every flat, sorted by `(rank, bitset)`. Results are memoized per ground set.
    pub fn all_flats(&self) -> Result<Arc<[Flat]>> {
        ensure_enumerable("ground set", self.size())?;
        if let Some(hit) = self.matroid.cached_flats(self.ground) {
            return Ok(hit);
        }
        let bottom = self.flat(ElementSet::EMPTY);
        let mut seen: HashSet<ElementSet> = HashSet::from([bottom.elements]);
        let mut all = vec![bottom];
        let mut level = vec![bottom];
        while !level.is_empty() {
            let mut next = Vec::new();
            for f in &level {
                for e in self.ground - f.elements {
                    let g = self.closure(f.elements.with(e));
                    if seen.insert(g) {
                        next.push(Flat::new(g, f.rank + 1));
                    }
                }
            }
            all.extend_from_slice(&next);
            level = next;
        }
        all.sort();
        let all: Arc<[Flat]> = all.into();
        self.matroid.store_flats(self.ground, all.clone());
        Ok(all)
    }

    /// Flats, optionally only those of rank `k`.
    pub fn flats(&self, k: Option<usize>) -> Result<Vec<Flat>> {
        let all = self.all_flats()?;
        Ok(match k {
            Some(k) => all.iter().copied().filter(|f| f.rank == k).collect(),
            None => all.to_vec(),
        })
    }

    pub fn hyperplanes(&self) -> Result<Vec<Flat>> {
        match self.full_rank() {
            0 => {
                self.all_flats()?;
                Ok(Vec::new())
            }
            r => self.flats(Some(r - 1)),
        }
    }

    /// Minimal dependent sets, sorted by bitset.
    pub fn circuits(&self) -> Result<Vec<ElementSet>> {
        ensure_enumerable("ground set", self.size())?;
        Ok(self
            .ground
            .subsets()
            .filter(|&c| self.is_circuit(c))
            .collect())
    }

    pub fn is_circuit(&self, c: ElementSet) -> bool {
        if c.is_empty() || !c.is_subset(self.ground) {
            return false;
        }
        let k = c.len();
        self.rank(c) == k - 1 && c.iter().all(|e| self.rank(c.without(e)) == k - 1)
    }

    /// Complements of hyperplanes, sorted by bitset.
    pub fn cocircuits(&self) -> Result<Vec<ElementSet>> {
        let mut out: Vec<ElementSet> = self
            .hyperplanes()?
            .into_iter()
            .map(|h| self.ground - h.elements)
            .collect();
        out.sort();
        Ok(out)
    }

    /// Partition of the ground set into connected components (two elements are
    /// related when some circuit contains both). Sorted by least element.
    pub fn connected_components(&self) -> Result<Vec<ElementSet>> {
        let ids: Vec<usize> = self.ground.iter().collect();
        let mut parent: Vec<usize> = (0..64).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        for c in self.circuits()? {
            let first = c.first().expect("circuits are non-empty");
            for e in c {
                let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                parent[a] = b;
            }
        }
        let mut comps: Vec<ElementSet> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; 64];
        for &e in &ids {
            let r = find(&mut parent, e);
            match root_of[r] {
                Some(i) => comps[i].insert(e),
                None => {
                    root_of[r] = Some(comps.len());
                    comps.push(ElementSet::singleton(e));
                }
            }
        }
        Ok(comps)
    }

    /// A matroid with at most one component (the empty matroid counts as connected).
    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.connected_components()?.len() <= 1)
    }

    /// A standalone copy of `M|X`, elements renumbered in increasing id order
    /// and labels kept.
    pub fn to_matroid(&self) -> Result<Matroid> {
        let ids: Vec<usize> = self.ground.iter().collect();
        let local = |s: ElementSet| -> ElementSet {
            s.iter().map(|e| ids.binary_search(&e).expect("inside the ground set")).collect()
        };
        let circuits = self.circuits()?.into_iter().map(local).collect();
        let labels = ids.iter().map(|&e| self.matroid.label(e).to_string()).collect();
        Matroid::from_circuits_with_labels(labels, circuits)
    }
}

#[cfg(test)]
mod tests {
    use crate::bitset::ElementSet;
    use crate::matroid::Matroid;

    fn s(ids: &[usize]) -> ElementSet {
        ids.iter().collect()
    }

    fn k4() -> Matroid {
        let v: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        Matroid::graphic(v, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn flats_of_k4_are_partitions_of_four_vertices() {
        let m = k4();
        // Bell(4) = 15 flats: 1 + 6 + 7 + 1
        let flats = m.flats(None).unwrap();
        assert_eq!(flats.len(), 15);
        let by_rank: Vec<usize> = (0..=3).map(|k| flats.iter().filter(|f| f.rank == k).count()).collect();
        assert_eq!(by_rank, vec![1, 6, 7, 1]);
        assert!(flats.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn restriction_flats_live_inside_the_restriction() {
        let m = k4();
        // triangle 12,13,23 = ids {0,1,3}
        let tri = m.restrict(s(&[0, 1, 3]));
        let flats = tri.flats(None).unwrap();
        assert_eq!(flats.len(), 5);
        assert!(flats.iter().all(|f| f.elements.is_subset(tri.ground())));
        assert_eq!(tri.full_rank(), 2);
    }

    #[test]
    fn circuits_and_cocircuits_of_k4() {
        let m = k4();
        let circuits = m.circuits().unwrap();
        // 4 triangles and 3 four-cycles
        assert_eq!(circuits.len(), 7);
        assert_eq!(circuits.iter().filter(|c| c.len() == 3).count(), 4);
        let cocircuits = m.cocircuits().unwrap();
        // 4 vertex stars + 3 cuts of a 2+2 bipartition
        assert_eq!(cocircuits.len(), 7);
        assert_eq!(cocircuits.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn components_of_a_forest_are_singletons() {
        let v: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
        let path = Matroid::graphic(v, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.connected_components().unwrap(), vec![s(&[0]), s(&[1])]);
        assert!(path.circuits().unwrap().is_empty());
        assert!(!path.is_connected().unwrap());
    }

    #[test]
    fn rank_zero_matroid_has_one_flat_and_no_hyperplanes() {
        let m = Matroid::uniform(0, 2).unwrap();
        assert_eq!(m.flats(None).unwrap().len(), 1);
        assert_eq!(m.hyperplanes().unwrap().len(), 0);
        assert_eq!(m.loops(), s(&[0, 1]));
        // every loop is its own component
        assert_eq!(m.connected_components().unwrap().len(), 2);
    }

    #[test]
    fn enumeration_refuses_large_ground_sets() {
        let m = Matroid::uniform(2, 17).unwrap();
        assert!(matches!(
            m.flats(None),
            Err(crate::error::Error::TooLarge { size: 17, .. })
        ));
        // rank still works without enumeration
        assert_eq!(m.full_rank(), 2);
    }
}

//! Modular flats, projections onto modular hyperplanes and modular covers.
//!
//! Every predicate works on a [`Restriction`] as well as on a whole matroid.
//! Loops lie in every flat, so "disjoint" below always means disjoint after
//! removing `cl(∅)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::{AsView, Flat, Restriction};

/// Two proper modular flats whose union is the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ModularCover {
    pub first: Flat,
    pub second: Flat,
}

/// `P_H(x, y) = H ∩ cl({x, y})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Projection {
    pub hyperplane: Flat,
    pub x: Flat,
    pub y: Flat,
    pub image: Flat,
}

fn require_flat(v: &Restriction<'_>, f: ElementSet) -> Result<()> {
    if v.is_flat(f) {
        Ok(())
    } else {
        Err(Error::NotAFlat(v.matroid().format_set(f)))
    }
}

// `f` against every flat it meets only in loops.
fn modular_among(v: &Restriction<'_>, f: ElementSet, flats: &[Flat]) -> bool {
    let loops = v.loops();
    let rf = v.rank(f);
    flats
        .iter()
        .all(|g| g.elements & f != loops || rf + g.rank == v.rank(f | g.elements))
}

/// Whether the flat `f` is modular.
pub fn is_modular_flat<V: AsView + ?Sized>(m: &V, f: ElementSet) -> Result<bool> {
    let v = m.as_view();
    require_flat(&v, f)?;
    let flats = v.all_flats()?;
    Ok(modular_among(&v, f, &flats))
}

/// Every modular flat, in `(rank, bitset)` order.
pub fn modular_flats<V: AsView + ?Sized>(m: &V) -> Result<Vec<Flat>> {
    let v = m.as_view();
    let flats = v.all_flats()?;
    Ok(flats
        .par_iter()
        .filter(|f| modular_among(&v, f.elements, &flats))
        .copied()
        .collect())
}

/// A hyperplane is modular exactly when it meets every line in a non-loop.
pub fn is_modular_hyperplane<V: AsView + ?Sized>(m: &V, h: ElementSet) -> Result<bool> {
    let v = m.as_view();
    require_flat(&v, h)?;
    let r = v.full_rank();
    if r == 0 || v.rank(h) + 1 != r {
        return Ok(false);
    }
    let lines = v.flats(Some(2))?;
    Ok(lines.iter().all(|l| v.rank(l.elements & h) >= 1))
}

pub fn modular_hyperplanes<V: AsView + ?Sized>(m: &V) -> Result<Vec<Flat>> {
    let v = m.as_view();
    let hyperplanes = v.hyperplanes()?;
    let lines = v.flats(Some(2))?;
    Ok(hyperplanes
        .into_iter()
        .filter(|h| lines.iter().all(|l| v.rank(l.elements & h.elements) >= 1))
        .collect())
}

/// `H ∩ cl({x, y})` for a modular hyperplane `H` and non-parallel non-loops
/// `x, y` outside it.
pub fn projection<V: AsView + ?Sized>(m: &V, h: ElementSet, x: usize, y: usize) -> Result<Projection> {
    let v = m.as_view();
    let name = |s: ElementSet| v.matroid().format_set(s);
    if !is_modular_hyperplane(&v, h)? {
        return Err(Error::NotModularHyperplane(name(h)));
    }
    for e in [x, y] {
        if !v.ground().contains(e) {
            return Err(Error::ElementOutOfRange {
                id: e,
                size: v.matroid().size(),
            });
        }
        if h.contains(e) {
            return Err(Error::ElementInHyperplane(v.matroid().label(e).to_string()));
        }
    }
    let pair = ElementSet::singleton(x).with(y);
    if v.rank(pair) != 2 {
        return Err(Error::ParallelElements(
            v.matroid().label(x).to_string(),
            v.matroid().label(y).to_string(),
        ));
    }
    let image = v.closure(pair) & h;
    let image = Flat::new(image, v.rank(image));
    if image.rank != 1 {
        return Err(Error::Invariant(format!("projection {} has rank {}", name(image.elements), image.rank)));
    }
    Ok(Projection {
        hyperplane: Flat::new(h, v.rank(h)),
        x: v.flat(ElementSet::singleton(x)),
        y: v.flat(ElementSet::singleton(y)),
        image,
    })
}

/// Unordered pairs of proper modular flats covering the ground set, each
/// once with `first <= second`.
pub fn modular_covers<V: AsView + ?Sized>(m: &V) -> Result<Vec<ModularCover>> {
    let v = m.as_view();
    let ground = v.ground();
    let proper: Vec<Flat> = modular_flats(&v)?
        .into_iter()
        .filter(|f| f.elements != ground)
        .collect();
    let mut out = Vec::new();
    for (i, a) in proper.iter().enumerate() {
        for b in &proper[i..] {
            if a.elements | b.elements == ground {
                out.push(ModularCover { first: *a, second: *b });
            }
        }
    }
    Ok(out)
}

/// Both flats proper, modular and covering the ground set.
pub fn is_modular_cover<V: AsView + ?Sized>(m: &V, a: ElementSet, b: ElementSet) -> Result<bool> {
    let v = m.as_view();
    let ground = v.ground();
    if a == ground || b == ground || a | b != ground || !v.is_flat(a) || !v.is_flat(b) {
        return Ok(false);
    }
    Ok(is_modular_flat(&v, a)? && is_modular_flat(&v, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{fano, pabx, u36, Matroid};

    fn k4() -> Matroid {
        let v: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        Matroid::graphic(v, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    // F is modular iff r(F) + r(G) = r(F ∨ G) + r(F ∩ G) for every flat G.
    fn lattice_modular(m: &Matroid, f: ElementSet) -> bool {
        m.flats(None).unwrap().iter().all(|g| {
            m.rank(f) + g.rank == m.rank(f | g.elements) + m.rank(f & g.elements)
        })
    }

    #[test]
    fn fixture_examples() {
        let p = pabx();
        assert!(is_modular_flat(&p, p.ground()).unwrap());
        assert!(is_modular_flat(&p, p.set(&["p", "a", "b", "c"]).unwrap()).unwrap());
        assert!(!is_modular_flat(&p, p.set(&["a", "d", "x"]).unwrap()).unwrap());
        let u = u36();
        assert!(!is_modular_flat(&u, u.set(&["a", "b"]).unwrap()).unwrap());
        assert!(is_modular_flat(&u, ElementSet::from_bits(0b10)).is_ok());
        assert!(matches!(is_modular_flat(&p, p.set(&["a", "d"]).unwrap()), Err(Error::NotAFlat(_))));
    }

    #[test]
    fn modular_flat_lists() {
        let u = u36();
        let mf = modular_flats(&u).unwrap();
        assert_eq!(mf.len(), 8);
        assert!(mf.iter().all(|f| f.rank != 2));
        // two disjoint edges form a flat that is not modular; the rest are cliques
        let k = k4();
        assert_eq!(modular_flats(&k).unwrap(), crate::roundness::round_flats(&k).unwrap());
        assert_eq!(modular_flats(&k).unwrap().len(), 12);
        let zero = Matroid::uniform(0, 3).unwrap();
        assert_eq!(modular_flats(&zero).unwrap(), vec![Flat::new(zero.ground(), 0)]);
    }

    #[test]
    fn modular_hyperplane_lists() {
        assert!(modular_hyperplanes(&u36()).unwrap().is_empty());
        let p = pabx();
        let hs: Vec<ElementSet> = modular_hyperplanes(&p).unwrap().iter().map(|f| f.elements).collect();
        assert!(hs.contains(&p.set(&["p", "a", "b", "c"]).unwrap()));
        assert!(hs.contains(&p.set(&["p", "d", "e", "f"]).unwrap()));
        let f7 = fano();
        assert_eq!(modular_hyperplanes(&f7).unwrap(), f7.hyperplanes().unwrap());
        assert_eq!(modular_hyperplanes(&f7).unwrap().len(), 7);
    }

    #[test]
    fn criteria_agree_with_the_lattice_identity() {
        for m in [u36(), pabx(), fano(), k4(), crate::matroid::w4(), crate::matroid::k33_dual()] {
            for f in m.flats(None).unwrap() {
                let expect = lattice_modular(&m, f.elements);
                assert_eq!(is_modular_flat(&m, f.elements).unwrap(), expect, "{}", m.format_set(f.elements));
                if f.rank + 1 == m.full_rank() {
                    assert_eq!(is_modular_hyperplane(&m, f.elements).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn loops_do_not_break_modularity() {
        // a loop plus U_{2,3}: every flat of the simple part stays modular
        let m = Matroid::direct_sum(vec![Matroid::uniform(0, 1).unwrap(), Matroid::uniform(2, 3).unwrap()]).unwrap();
        let flats = m.flats(None).unwrap();
        assert!(flats.iter().all(|f| f.elements.contains(0)));
        assert_eq!(modular_flats(&m).unwrap(), flats);
    }

    #[test]
    fn projections() {
        let p = pabx();
        let h = p.set(&["p", "a", "b", "c"]).unwrap();
        let proj = projection(&p, h, p.element("d").unwrap(), p.element("x").unwrap()).unwrap();
        assert_eq!(proj.image.elements, p.set(&["a"]).unwrap());
        // K4 edges: 12,13,14,23,24,34; triangle 123 = {12,13,23}
        let k = k4();
        let tri = ElementSet::from_iter([0usize, 1, 3]);
        let proj = projection(&k, tri, 2, 4).unwrap();
        assert_eq!(proj.image.elements, ElementSet::singleton(0));
        assert!(matches!(projection(&k, tri, 0, 2), Err(Error::ElementInHyperplane(_))));
        let u = u36();
        assert!(matches!(projection(&u, u.set(&["a", "b"]).unwrap(), 2, 3), Err(Error::NotModularHyperplane(_))));
        let par = Matroid::graphic(vec!["u".into(), "v".into(), "w".into()], vec![(0, 1), (1, 2), (1, 2)]).unwrap();
        assert!(matches!(projection(&par, ElementSet::singleton(0), 1, 2), Err(Error::ParallelElements(..))));
    }

    #[test]
    fn cover_lists() {
        assert!(modular_covers(&u36()).unwrap().is_empty());
        let path = Matroid::graphic(vec!["u".into(), "v".into(), "w".into()], vec![(0, 1), (1, 2)]).unwrap();
        let covers = modular_covers(&path).unwrap();
        assert_eq!(covers.len(), 1);
        assert_eq!((covers[0].first.elements, covers[0].second.elements), (ElementSet::singleton(0), ElementSet::singleton(1)));
        for c in modular_covers(&pabx()).unwrap() {
            assert!(is_modular_cover(&pabx(), c.first.elements, c.second.elements).unwrap());
        }
    }
}

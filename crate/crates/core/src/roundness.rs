//! Vertical covers, round flats and rotunda.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::matroid::{AsView, Flat, Restriction};

/// Two proper flats whose union is the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VerticalCover {
    pub first: Flat,
    pub second: Flat,
}

/// A maximal round flat.
pub type Rotunda = Flat;

/// `M|X` is round when, for each hyperplane `H` of `M|X`, `X − H` spans `M|X`.
pub fn is_round<V: AsView + ?Sized>(m: &V, x: ElementSet) -> Result<bool> {
    let v = m.as_view();
    v.matroid().check_subset(x)?;
    let sub = v.restrict(x);
    let r = sub.full_rank();
    if r <= 1 {
        return Ok(true);
    }
    Ok(sub.hyperplanes()?.iter().all(|h| sub.rank(x - h.elements) == r))
}

// For a flat `f` of `v`, the hyperplanes of `v|f` are the flats of `v` inside
// `f` of rank `r(f) − 1`.
fn flat_is_round(v: &Restriction<'_>, f: &Flat, flats: &[Flat]) -> bool {
    f.rank <= 1
        || flats
            .iter()
            .filter(|h| h.rank + 1 == f.rank && h.elements.is_subset(f.elements))
            .all(|h| v.rank(f.elements - h.elements) == f.rank)
}

/// Every vertical cover `(F, F′)` with `F <= F′`.
pub fn vertical_separations<V: AsView + ?Sized>(m: &V) -> Result<Vec<VerticalCover>> {
    let v = m.as_view();
    let ground = v.ground();
    let flats = v.all_flats()?;
    let proper: Vec<Flat> = flats.iter().copied().filter(|f| f.elements != ground).collect();
    let mut out = Vec::new();
    for (i, a) in proper.iter().enumerate() {
        for b in &proper[i..] {
            if a.elements | b.elements == ground {
                out.push(VerticalCover { first: *a, second: *b });
            }
        }
    }
    Ok(out)
}

/// Every round flat, in `(rank, bitset)` order.
pub fn round_flats<V: AsView + ?Sized>(m: &V) -> Result<Vec<Flat>> {
    let v = m.as_view();
    let flats = v.all_flats()?;
    Ok(flats
        .par_iter()
        .filter(|f| flat_is_round(&v, f, &flats))
        .copied()
        .collect())
}

/// Inclusion-maximal round flats, in `(rank, bitset)` order.
pub fn rotunda<V: AsView + ?Sized>(m: &V) -> Result<Vec<Rotunda>> {
    let round = round_flats(m)?;
    Ok(round
        .iter()
        .filter(|f| !round.iter().any(|g| f.elements.is_proper_subset(g.elements)))
        .copied()
        .collect())
}

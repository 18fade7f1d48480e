//! Supersolvability, saturation and C-chordality.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::{AsView, Flat, Restriction};
use crate::modularity::{is_modular_flat, modular_flats, modular_hyperplanes};
use crate::roundness::round_flats;

/// `F_0 ⊆ F_1 ⊆ … ⊆ F_r` with `r(F_i) = i` and every `F_i` modular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularChain {
    pub flats: Vec<Flat>,
}

/// `A ∪ z` and `B ∪ z` are circuits for the partition `(A, B)` of the circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Chord {
    pub circuit: ElementSet,
    pub chord: usize,
    pub part_a: ElementSet,
    pub part_b: ElementSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordalityProfile {
    pub supersolvable: bool,
    pub saturated: bool,
    pub c_chordal: bool,
    pub chain: Option<ModularChain>,
    /// A round flat that is not modular.
    pub unsaturated_witness: Option<Flat>,
    pub chordless_circuit: Option<ElementSet>,
}

impl ChordalityProfile {
    pub fn flags(&self) -> (bool, bool, bool) {
        (self.supersolvable, self.saturated, self.c_chordal)
    }
}

/// A full chain of modular flats, found by trying every modular hyperplane
/// `H` and recursing into `M|H`. Failed restrictions are memoized.
pub fn supersolvable_chain<V: AsView + ?Sized>(m: &V) -> Result<Option<ModularChain>> {
    let v = m.as_view();
    let mut memo = HashMap::new();
    Ok(chain_below(&v, &mut memo)?.map(|flats| ModularChain { flats }))
}

fn chain_below(v: &Restriction<'_>, memo: &mut HashMap<ElementSet, Option<Vec<Flat>>>) -> Result<Option<Vec<Flat>>> {
    if let Some(hit) = memo.get(&v.ground()) {
        return Ok(hit.clone());
    }
    let top = Flat::new(v.ground(), v.full_rank());
    let found = if top.rank == 0 {
        Some(vec![top])
    } else {
        let mut found = None;
        for h in modular_hyperplanes(v)? {
            if let Some(mut chain) = chain_below(&v.restrict(h.elements), memo)? {
                chain.push(top);
                found = Some(chain);
                break;
            }
        }
        found
    };
    memo.insert(v.ground(), found.clone());
    Ok(found)
}

pub fn is_supersolvable<V: AsView + ?Sized>(m: &V) -> Result<bool> {
    Ok(supersolvable_chain(m)?.is_some())
}

/// The least round flat that is not modular, if any.
pub fn saturation_witness<V: AsView + ?Sized>(m: &V) -> Result<Option<Flat>> {
    let v = m.as_view();
    let modular = modular_flats(&v)?;
    Ok(round_flats(&v)?
        .into_iter()
        .find(|f| modular.binary_search(f).is_err()))
}

pub fn is_saturated<V: AsView + ?Sized>(m: &V) -> Result<bool> {
    Ok(saturation_witness(m)?.is_none())
}

fn require_circuit(v: &Restriction<'_>, c: ElementSet) -> Result<()> {
    if v.is_circuit(c) {
        Ok(())
    } else {
        Err(Error::NotACircuit(v.matroid().format_set(c)))
    }
}

/// Every chord of the circuit `c`; each partition is listed once, with the
/// least element of `c` in `part_a`.
pub fn chords<V: AsView + ?Sized>(m: &V, c: ElementSet) -> Result<Vec<Chord>> {
    let v = m.as_view();
    require_circuit(&v, c)?;
    Ok(chords_of(&v, c, usize::MAX))
}

fn chords_of(v: &Restriction<'_>, c: ElementSet, limit: usize) -> Vec<Chord> {
    let least = ElementSet::singleton(c.first().expect("circuits are non-empty"));
    let rest = c - least;
    let mut out = Vec::new();
    for z in v.ground() - c {
        for extra in rest.subsets() {
            let a = least | extra;
            let b = c - a;
            if b.is_empty() {
                continue;
            }
            if v.is_circuit(a.with(z)) && v.is_circuit(b.with(z)) {
                out.push(Chord {
                    circuit: c,
                    chord: z,
                    part_a: a,
                    part_b: b,
                });
                if out.len() >= limit {
                    return out;
                }
            }
        }
    }
    out
}

/// A circuit of size at least four without a chord, if any.
pub fn chordless_circuit<V: AsView + ?Sized>(m: &V) -> Result<Option<ElementSet>> {
    let v = m.as_view();
    Ok(v.circuits()?
        .into_iter()
        .filter(|c| c.len() >= 4)
        .find(|&c| chords_of(&v, c, 1).is_empty()))
}

pub fn is_c_chordal<V: AsView + ?Sized>(m: &V) -> Result<bool> {
    Ok(chordless_circuit(m)?.is_none())
}

/// Distinct `x, y ∈ C` and `z ∉ C` with `{x, y, z}` and `(C − {x, y}) ∪ z`
/// both circuits.
pub fn strong_chord_witness<V: AsView + ?Sized>(m: &V, c: ElementSet) -> Result<Option<(usize, usize, usize)>> {
    let v = m.as_view();
    require_circuit(&v, c)?;
    if c.len() < 4 {
        return Err(Error::Hypothesis(format!(
            "circuit {} has fewer than four elements",
            v.matroid().format_set(c)
        )));
    }
    for x in c {
        for y in c.iter().filter(|&y| y > x) {
            for z in v.ground() - c {
                let small = ElementSet::singleton(x).with(y).with(z);
                if v.is_circuit(small) && v.is_circuit(c.without(x).without(y).with(z)) {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

/// All three properties with their witnesses.
pub fn classify<V: AsView + ?Sized>(m: &V) -> Result<ChordalityProfile> {
    let v = m.as_view();
    let chain = supersolvable_chain(&v)?;
    let unsaturated_witness = saturation_witness(&v)?;
    let chordless = chordless_circuit(&v)?;
    Ok(ChordalityProfile {
        supersolvable: chain.is_some(),
        saturated: unsaturated_witness.is_none(),
        c_chordal: chordless.is_none(),
        chain,
        unsaturated_witness,
        chordless_circuit: chordless,
    })
}

/// Checks that `chain` is a full chain of modular flats of `m`.
pub fn is_modular_chain<V: AsView + ?Sized>(m: &V, chain: &ModularChain) -> Result<bool> {
    let v = m.as_view();
    if chain.flats.len() != v.full_rank() + 1 {
        return Ok(false);
    }
    for (i, f) in chain.flats.iter().enumerate() {
        if f.rank != i || v.rank(f.elements) != i || !v.is_flat(f.elements) || !is_modular_flat(&v, f.elements)? {
            return Ok(false);
        }
        if i > 0 && !chain.flats[i - 1].elements.is_subset(f.elements) {
            return Ok(false);
        }
    }
    Ok(chain.flats.last().map(|f| f.elements) == Some(v.ground()))
}

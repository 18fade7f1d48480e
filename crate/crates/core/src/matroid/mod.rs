//! Explicit matroids with a uniform rank / closure / circuit interface.
//!
//! A [`Matroid`] owns one concrete [`Representation`]; every derived notion is
//! computed from its rank function. Work on a restriction `M|X` goes through a
//! [`Restriction`], a cheap view that shares the parent's rank oracle.

mod catalog;
mod io;
mod view;

pub use catalog::{
    catalog, connected_graphs, fano, k33_dual, pabx, u36, uniform, w4, CatalogEntry,
    GRAPH_ORDER_LIMIT,
};
pub(crate) use catalog::{graph_matroid, k33, minimal_cuts};
pub use io::MatroidFile;
pub use view::{AsView, Restriction};

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Default ground-set bound for exponential enumerations.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

// Full rank tables are kept for ground sets up to this size (2^20 bytes).
const RANK_TABLE_LIMIT: usize = 20;

static ENUMERATION_BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_ENUMERATION_BOUND);

pub fn enumeration_bound() -> usize {
    ENUMERATION_BOUND.load(Ordering::Relaxed)
}

/// Sets the process-wide bound used by every enumeration operation.
pub fn set_enumeration_bound(bound: usize) {
    ENUMERATION_BOUND.store(bound.min(MAX_ELEMENTS), Ordering::Relaxed);
}

pub(crate) fn ensure_enumerable(what: &'static str, size: usize) -> Result<()> {
    ensure_bound(what, size, enumeration_bound())
}

pub(crate) fn ensure_bound(what: &'static str, size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::TooLarge { what, size, bound })
    } else {
        Ok(())
    }
}

/// A closed set together with its rank. Ordered by `(rank, bitset)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Flat {
    pub rank: usize,
    pub elements: ElementSet,
}

impl Flat {
    pub fn new(elements: ElementSet, rank: usize) -> Self {
        Flat { rank, elements }
    }
}

/// Concrete description of a matroid. Element `i` of the ground set is column
/// `i` (linear), edge `i` (graphic), and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    /// Cycle matroid of a multigraph. Self-loops are loops, parallel edges are
    /// parallel elements.
    Graphic {
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        rank: usize,
        size: usize,
    },
    /// Column matroid of a row-major matrix over GF(p).
    Linear {
        field: u8,
        rows: Vec<Vec<u8>>,
    },
    Circuits(Vec<ElementSet>),
    Bases(Vec<ElementSet>),
    DirectSum(Vec<Matroid>),
}

pub const SUPPORTED_FIELDS: [u8; 4] = [2, 3, 5, 7];

pub struct Matroid {
    name: Option<String>,
    labels: Vec<String>,
    repr: Representation,
    // direct sums: starting id of each part
    offsets: Vec<usize>,
    rank_table: OnceLock<Vec<u8>>,
    flats_cache: Mutex<HashMap<ElementSet, Arc<[Flat]>>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid::assemble(self.name.clone(), self.labels.clone(), self.repr.clone())
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels && self.repr == other.repr
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("repr", &self.repr)
            .finish()
    }
}

impl Serialize for Matroid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatroidFile::from_matroid(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = MatroidFile::deserialize(d)?;
        file.into_matroid().map_err(serde::de::Error::custom)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::InvalidMatroid(format!(
            "{} elements exceed the supported maximum of {MAX_ELEMENTS}",
            labels.len()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::InvalidMatroid(format!("duplicate element label `{l}`")));
        }
    }
    Ok(())
}

impl Matroid {
    fn assemble(name: Option<String>, labels: Vec<String>, repr: Representation) -> Self {
        let offsets = match &repr {
            Representation::DirectSum(parts) => {
                let mut acc = 0;
                parts
                    .iter()
                    .map(|p| {
                        let o = acc;
                        acc += p.size();
                        o
                    })
                    .collect()
            }
            _ => Vec::new(),
        };
        Matroid {
            name,
            labels,
            repr,
            offsets,
            rank_table: OnceLock::new(),
            flats_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Cycle matroid of a multigraph given by vertex labels and edge endpoints.
    pub fn graphic(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let nv = vertices.len();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= nv || v >= nv) {
            return Err(Error::InvalidMatroid(format!(
                "edge ({u}, {v}) references a vertex outside 0..{nv}"
            )));
        }
        let mut labels = Vec::with_capacity(edges.len());
        let mut used: HashMap<String, usize> = HashMap::new();
        for &(u, v) in &edges {
            let base = format!("{}-{}", vertices[u], vertices[v]);
            let k = used.entry(base.clone()).or_insert(0);
            *k += 1;
            labels.push(if *k == 1 { base } else { format!("{base}#{k}") });
        }
        Self::graphic_with_labels(vertices, edges, labels)
    }

    pub fn graphic_with_labels(
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if labels.len() != edges.len() {
            return Err(Error::InvalidMatroid("label count differs from edge count".into()));
        }
        let nv = vertices.len();
        if edges.iter().any(|&(u, v)| u >= nv || v >= nv) {
            return Err(Error::InvalidMatroid("edge endpoint out of range".into()));
        }
        check_labels(&labels)?;
        Ok(Self::assemble(None, labels, Representation::Graphic { vertices, edges }))
    }

    pub fn uniform(rank: usize, size: usize) -> Result<Self> {
        Self::uniform_with_labels(rank, default_labels(size))
    }

    pub fn uniform_with_labels(rank: usize, labels: Vec<String>) -> Result<Self> {
        let size = labels.len();
        if rank > size {
            return Err(Error::InvalidMatroid(format!(
                "uniform rank {rank} exceeds size {size}"
            )));
        }
        check_labels(&labels)?;
        Ok(Self::assemble(None, labels, Representation::Uniform { rank, size }))
    }

    /// Column matroid of `rows` (row-major) over GF(`field`). Entries are
    /// reduced modulo `field`.
    pub fn linear(field: u8, rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::linear_with_labels(field, rows, default_labels(cols))
    }

    pub fn linear_with_labels(field: u8, rows: Vec<Vec<i64>>, labels: Vec<String>) -> Result<Self> {
        if !SUPPORTED_FIELDS.contains(&field) {
            return Err(Error::InvalidMatroid(format!(
                "field GF({field}) is not supported; use one of {SUPPORTED_FIELDS:?}"
            )));
        }
        let cols = labels.len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatroid(format!(
                "every matrix row must have {cols} entries"
            )));
        }
        check_labels(&labels)?;
        let p = i64::from(field);
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.rem_euclid(p) as u8).collect())
            .collect();
        Ok(Self::assemble(None, labels, Representation::Linear { field, rows }))
    }

    /// Matroid given by its circuits; validated against the circuit axioms.
    pub fn from_circuits(size: usize, circuits: Vec<ElementSet>) -> Result<Self> {
        Self::from_circuits_with_labels(default_labels(size), circuits)
    }

    pub fn from_circuits_with_labels(labels: Vec<String>, circuits: Vec<ElementSet>) -> Result<Self> {
        check_labels(&labels)?;
        let mut circuits = circuits;
        circuits.sort();
        circuits.dedup();
        validate_circuits(labels.len(), &circuits)?;
        Ok(Self::assemble(None, labels, Representation::Circuits(circuits)))
    }

    /// Matroid given by its bases; validated against the basis axioms.
    pub fn from_bases(size: usize, bases: Vec<ElementSet>) -> Result<Self> {
        Self::from_bases_with_labels(default_labels(size), bases)
    }

    pub fn from_bases_with_labels(labels: Vec<String>, bases: Vec<ElementSet>) -> Result<Self> {
        check_labels(&labels)?;
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        validate_bases(labels.len(), &bases)?;
        Ok(Self::assemble(None, labels, Representation::Bases(bases)))
    }

    /// Direct sum; parts are re-indexed consecutively. Labels are kept when they
    /// are globally unique and prefixed with the part index otherwise.
    pub fn direct_sum(parts: Vec<Matroid>) -> Result<Self> {
        let mut labels: Vec<String> = parts.iter().flat_map(|p| p.labels.iter().cloned()).collect();
        if check_labels(&labels).is_err() {
            labels = parts
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.labels.iter().map(move |l| format!("{i}:{l}")))
                .collect();
        }
        check_labels(&labels)?;
        Ok(Self::assemble(None, labels, Representation::DirectSum(parts)))
    }

    /// A rank-3 simple matroid given by its lines with at least three points.
    /// Circuits are the 3-subsets of each line and the 4-sets with no three
    /// points on a common line.
    pub fn rank3_from_lines(labels: Vec<String>, lines: &[ElementSet]) -> Result<Self> {
        let n = labels.len();
        for (i, a) in lines.iter().enumerate() {
            if a.len() < 3 {
                return Err(Error::InvalidMatroid(format!("line {a:?} has fewer than 3 points")));
            }
            for b in &lines[i + 1..] {
                if (*a & *b).len() > 1 {
                    return Err(Error::InvalidMatroid(format!(
                        "lines {a:?} and {b:?} share more than one point"
                    )));
                }
            }
        }
        let ground = ElementSet::full(n);
        let collinear = |t: ElementSet| lines.iter().any(|l| t.is_subset(*l));
        let mut circuits: Vec<ElementSet> = ground.subsets_of_size(3).filter(|t| collinear(*t)).collect();
        circuits.extend(ground.subsets_of_size(4).filter(|q| {
            q.iter().all(|e| !collinear(q.without(e)))
        }));
        let m = Self::from_circuits_with_labels(labels, circuits)?;
        if m.rank(ground) != 3.min(n) {
            return Err(Error::InvalidMatroid("lines do not describe a rank-3 matroid".into()));
        }
        Ok(m)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// Set of elements named by `labels`.
    pub fn set(&self, labels: &[&str]) -> Result<ElementSet> {
        labels.iter().map(|l| self.element(l)).collect()
    }

    /// Human-readable `{a, b, c}` rendering of a subset.
    pub fn format_set(&self, s: ElementSet) -> String {
        let names: Vec<&str> = s.iter().map(|e| self.label(e)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn set_labels(&self, s: ElementSet) -> Vec<String> {
        s.iter().map(|e| self.labels[e].clone()).collect()
    }

    pub fn check_subset(&self, x: ElementSet) -> Result<()> {
        if x.is_subset(self.ground()) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                id: (x - self.ground()).first().unwrap_or(0),
                size: self.size(),
            })
        }
    }

    /// View of the whole matroid.
    pub fn view(&self) -> Restriction<'_> {
        Restriction::new(self, self.ground())
    }

    /// The restriction `M|X`.
    pub fn restrict(&self, x: ElementSet) -> Restriction<'_> {
        Restriction::new(self, x & self.ground())
    }

    /// Rank of `x`. Ids outside the ground set are ignored; use
    /// [`Matroid::checked_rank`] to reject them.
    pub fn rank(&self, x: ElementSet) -> usize {
        let x = x & self.ground();
        if self.size() <= RANK_TABLE_LIMIT {
            let table = self.rank_table.get_or_init(|| {
                let n = self.size();
                (0..1u64 << n)
                    .map(|bits| self.oracle_rank(ElementSet::from_bits(bits)) as u8)
                    .collect()
            });
            table[x.bits() as usize] as usize
        } else {
            self.oracle_rank(x)
        }
    }

    pub fn checked_rank(&self, x: ElementSet) -> Result<usize> {
        self.check_subset(x)?;
        Ok(self.rank(x))
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    /// `{e : r(X ∪ e) = r(X)}`.
    pub fn closure(&self, x: ElementSet) -> ElementSet {
        self.view().closure(x)
    }

    pub fn checked_closure(&self, x: ElementSet) -> Result<ElementSet> {
        self.check_subset(x)?;
        Ok(self.closure(x))
    }

    pub fn is_independent(&self, x: ElementSet) -> bool {
        self.rank(x) == x.len()
    }

    pub fn loops(&self) -> ElementSet {
        self.closure(ElementSet::EMPTY)
    }

    pub fn flats(&self, rank: Option<usize>) -> Result<Vec<Flat>> {
        self.view().flats(rank)
    }

    pub fn circuits(&self) -> Result<Vec<ElementSet>> {
        self.view().circuits()
    }

    pub fn cocircuits(&self) -> Result<Vec<ElementSet>> {
        self.view().cocircuits()
    }

    pub fn hyperplanes(&self) -> Result<Vec<Flat>> {
        self.view().hyperplanes()
    }

    pub fn connected_components(&self) -> Result<Vec<ElementSet>> {
        self.view().connected_components()
    }

    pub fn is_connected(&self) -> Result<bool> {
        self.view().is_connected()
    }

    pub(crate) fn cached_flats(&self, ground: ElementSet) -> Option<Arc<[Flat]>> {
        self.flats_cache.lock().ok()?.get(&ground).cloned()
    }

    pub(crate) fn store_flats(&self, ground: ElementSet, flats: Arc<[Flat]>) {
        if let Ok(mut cache) = self.flats_cache.lock() {
            cache.insert(ground, flats);
        }
    }

    fn oracle_rank(&self, x: ElementSet) -> usize {
        match &self.repr {
            Representation::Graphic { vertices, edges } => graphic_rank(vertices.len(), edges, x),
            Representation::Uniform { rank, .. } => x.len().min(*rank),
            Representation::Linear { field, rows } => linear_rank(*field, rows, x),
            Representation::Circuits(circuits) => greedy_rank(x, |i| {
                circuits.iter().all(|c| !c.is_subset(i))
            }),
            Representation::Bases(bases) => greedy_rank(x, |i| bases.iter().any(|b| i.is_subset(*b))),
            Representation::DirectSum(parts) => parts
                .iter()
                .zip(&self.offsets)
                .map(|(p, &off)| {
                    let local = ElementSet::from_bits(x.bits() >> off) & p.ground();
                    p.rank(local)
                })
                .sum(),
        }
    }

    /// Ids occupied by each direct-sum part (empty for other representations).
    pub fn part_grounds(&self) -> Vec<ElementSet> {
        match &self.repr {
            Representation::DirectSum(parts) => parts
                .iter()
                .zip(&self.offsets)
                .map(|(p, &off)| ElementSet::from_bits(p.ground().bits() << off))
                .collect(),
            _ => Vec::new(),
        }
    }
}

fn greedy_rank(x: ElementSet, independent: impl Fn(ElementSet) -> bool) -> usize {
    let mut basis = ElementSet::EMPTY;
    for e in x {
        let next = basis.with(e);
        if independent(next) {
            basis = next;
        }
    }
    basis.len()
}

fn graphic_rank(nv: usize, edges: &[(usize, usize)], x: ElementSet) -> usize {
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    let mut rank = 0;
    for e in x {
        let (u, v) = edges[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut result = 1u32;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

fn linear_rank(field: u8, rows: &[Vec<u8>], x: ElementSet) -> usize {
    let p = u32::from(field);
    let cols: Vec<usize> = x.iter().collect();
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| u32::from(r[c])).collect())
        .collect();
    let (nr, nc) = (m.len(), cols.len());
    let mut rank = 0;
    for c in 0..nc {
        let Some(pivot) = (rank..nr).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inverse_mod(m[rank][c], p);
        for k in c..nc {
            m[rank][k] = m[rank][k] * inv % p;
        }
        for r in 0..nr {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in c..nc {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

fn validate_circuits(n: usize, circuits: &[ElementSet]) -> Result<()> {
    let ground = ElementSet::full(n);
    for c in circuits {
        if c.is_empty() {
            return Err(Error::InvalidCircuits("the empty set is not a circuit".into()));
        }
        if !c.is_subset(ground) {
            return Err(Error::InvalidCircuits(format!("{c:?} leaves the ground set")));
        }
    }
    for (i, a) in circuits.iter().enumerate() {
        for b in &circuits[i + 1..] {
            if a.is_subset(*b) || b.is_subset(*a) {
                return Err(Error::InvalidCircuits(format!("{a:?} and {b:?} are nested")));
            }
            for e in *a & *b {
                let rest = (*a | *b).without(e);
                if !circuits.iter().any(|c| c.is_subset(rest)) {
                    return Err(Error::InvalidCircuits(format!(
                        "elimination fails for {a:?}, {b:?} at element {e}"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn validate_bases(n: usize, bases: &[ElementSet]) -> Result<()> {
    let ground = ElementSet::full(n);
    let Some(first) = bases.first() else {
        return Err(Error::InvalidBases("a matroid has at least one basis".into()));
    };
    let r = first.len();
    for b in bases {
        if !b.is_subset(ground) {
            return Err(Error::InvalidBases(format!("{b:?} leaves the ground set")));
        }
        if b.len() != r {
            return Err(Error::InvalidBases(format!("{b:?} has size {} not {r}", b.len())));
        }
    }
    for b1 in bases {
        for b2 in bases {
            for x in *b1 - *b2 {
                let ok = (*b2 - *b1)
                    .iter()
                    .any(|y| bases.binary_search(&b1.without(x).with(y)).is_ok());
                if !ok {
                    return Err(Error::InvalidBases(format!(
                        "exchange fails for {b1:?}, {b2:?} at element {x}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ids: &[usize]) -> ElementSet {
        ids.iter().collect()
    }

    #[test]
    fn uniform_rank_is_truncated_cardinality() {
        let m = Matroid::uniform(3, 6).unwrap();
        assert_eq!(m.rank(ElementSet::EMPTY), 0);
        assert_eq!(m.rank(s(&[0, 1, 2, 3])), 3);
        assert_eq!(m.rank(s(&[0, 1])), 2);
        assert!(Matroid::uniform(4, 3).is_err());
    }

    #[test]
    fn graphic_k4_has_rank_three() {
        let v: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let m = Matroid::graphic(v, edges).unwrap();
        assert_eq!(m.full_rank(), 3);
        assert_eq!(m.label(0), "1-2");
        // triangle 12,13,23
        assert_eq!(m.rank(s(&[0, 1, 3])), 2);
    }

    #[test]
    fn graphic_multigraph_loops_and_parallels() {
        let v = vec!["a".to_string(), "b".to_string()];
        let m = Matroid::graphic(v, vec![(0, 1), (0, 1), (0, 0)]).unwrap();
        assert_eq!(m.labels(), ["a-b", "a-b#2", "a-a"]);
        assert_eq!(m.loops(), s(&[2]));
        assert_eq!(m.closure(s(&[0])), s(&[0, 1, 2]));
    }

    #[test]
    fn linear_rank_over_gf3() {
        // U_{2,4} over GF(3)
        let m = Matroid::linear(3, vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        for pair in m.ground().subsets_of_size(2) {
            assert_eq!(m.rank(pair), 2);
        }
        assert_eq!(m.full_rank(), 2);
        // over GF(2) the last column reduces to (1,0), parallel to the first
        let m2 = Matroid::linear(2, vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(m2.rank(s(&[0, 3])), 1);
        assert!(Matroid::linear(4, vec![vec![1]]).is_err());
    }

    #[test]
    fn circuits_are_validated() {
        // two triangles sharing an edge: circuits {0,1,2}, {2,3,4}, {0,1,3,4}
        let ok = Matroid::from_circuits(5, vec![s(&[0, 1, 2]), s(&[2, 3, 4]), s(&[0, 1, 3, 4])]);
        assert!(ok.is_ok());
        let missing = Matroid::from_circuits(5, vec![s(&[0, 1, 2]), s(&[2, 3, 4])]);
        assert!(matches!(missing, Err(Error::InvalidCircuits(_))));
        let nested = Matroid::from_circuits(4, vec![s(&[0, 1]), s(&[0, 1, 2])]);
        assert!(matches!(nested, Err(Error::InvalidCircuits(_))));
    }

    #[test]
    fn bases_are_validated() {
        let u24: Vec<_> = ElementSet::full(4).subsets_of_size(2).collect();
        let m = Matroid::from_bases(4, u24.clone()).unwrap();
        assert_eq!(m.full_rank(), 2);
        let broken = vec![s(&[0, 1]), s(&[2, 3])];
        assert!(matches!(Matroid::from_bases(4, broken), Err(Error::InvalidBases(_))));
        assert!(Matroid::from_bases(3, vec![s(&[0]), s(&[1, 2])]).is_err());
    }

    #[test]
    fn direct_sum_adds_ranks() {
        let a = Matroid::uniform(1, 1).unwrap();
        let b = Matroid::uniform(2, 3).unwrap();
        let m = Matroid::direct_sum(vec![a, b]).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.labels()[0], "0:0");
        assert_eq!(m.full_rank(), 3);
        assert_eq!(m.rank(s(&[1, 2, 3])), 2);
        assert_eq!(m.part_grounds(), vec![s(&[0]), s(&[1, 2, 3])]);
    }

    #[test]
    fn checked_rank_rejects_out_of_range() {
        let m = Matroid::uniform(1, 2).unwrap();
        assert_eq!(
            m.checked_rank(s(&[5])),
            Err(Error::ElementOutOfRange { id: 5, size: 2 })
        );
    }

    #[test]
    fn rank3_lines_reject_bad_input() {
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        assert!(Matroid::rank3_from_lines(labels.clone(), &[s(&[0, 1])]).is_err());
        assert!(Matroid::rank3_from_lines(labels, &[s(&[0, 1, 2]), s(&[0, 1, 3])]).is_err());
    }
}

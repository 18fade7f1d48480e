//! Moving between chordal graphs and supersolvable saturated matroids.
//!
//! A chordal graph `G` is sent to `M(G′)`, where `G′` is a 2-connected chordal
//! graph with the same reduced clique graph. A connected supersolvable
//! saturated matroid is sent to a compliant graph: a 2-connected chordal graph
//! whose reduced clique graph is its rotunda graph, built one modular
//! hyperplane at a time.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::classification::supersolvable_chain;
use crate::error::{Error, Result};
use crate::graph::{find_isomorphism, is_chordal, maximal_cliques, reduced_clique_graph, SimpleGraph, VertexSet};
use crate::matroid::{AsView, Matroid, Restriction};
use crate::modularity::modular_flats;
use crate::rotunda_graph::{require_supersolvable_saturated, rotunda_graph};
use crate::roundness::{round_flats, rotunda};
use crate::weighting::Weighting;

/// Condition (iv) of compliance is only checked up to this many elements.
pub const COMPLIANCE_ELEMENT_BOUND: usize = 12;

/// Cycle matroid of `g`; element `i` is the `i`-th edge of [`SimpleGraph::edges`].
pub fn graphic_matroid(g: &SimpleGraph) -> Matroid {
    crate::matroid::graph_matroid(g)
}

/// Edge ids of `M(G)` with both ends in `clique`.
pub fn clique_edge_set(g: &SimpleGraph, clique: VertexSet) -> ElementSet {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| clique.contains(u) && clique.contains(v))
        .map(|(i, _)| i)
        .collect()
}

/// Adds a twin `v′` next to every cut-vertex `v`, adjacent to `v` and to every
/// current neighbour of `v`, earlier twins included, so `v` and `v′` end up
/// with the same closed neighbourhood. Twins are labelled `v'` and appended in
/// id order.
pub fn two_connectivize(g: &SimpleGraph) -> Result<SimpleGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = g.clone();
    for v in g.cut_vertices() {
        let mut label = format!("{}'", g.label(v));
        while out.labels().contains(&label) {
            label.push('\'');
        }
        let twin = out.add_vertex(label)?;
        out.add_edge(v, twin)?;
        for u in out.neighbors(v).without(twin) {
            out.add_edge(u, twin)?;
        }
    }
    if !out.is_two_connected() {
        return Err(Error::Invariant("twinning the cut-vertices left a cut-vertex".into()));
    }
    if is_chordal(g).is_chordal() && !is_chordal(&out).is_chordal() {
        return Err(Error::Invariant("twinning the cut-vertices broke chordality".into()));
    }
    Ok(out)
}

/// For a 2-connected chordal graph, checks that identifying each maximal
/// clique with its edge set turns `C_R(G)` into `R(M(G))` exactly: the same
/// nodes and the same edges.
pub fn check_rcg_equals_rotunda_graph(g: &SimpleGraph) -> Result<bool> {
    if !is_chordal(g).is_chordal() {
        return Err(Error::NotChordal);
    }
    if !g.is_two_connected() {
        return Err(Error::Hypothesis("the graph is not 2-connected".into()));
    }
    let m = graphic_matroid(g);
    let rcg = reduced_clique_graph(g, &Weighting::Cardinality)?;
    let rg = rotunda_graph(&m, &Weighting::Rank)?;
    let flats: Vec<ElementSet> = rcg.cliques.iter().map(|&c| clique_edge_set(g, c)).collect();
    let rot: Vec<ElementSet> = rg.rotunda.iter().map(|r| r.elements).collect();
    let mut sorted = flats.clone();
    sorted.sort();
    let mut rot_sorted = rot.clone();
    rot_sorted.sort();
    if sorted != rot_sorted {
        return Ok(false);
    }
    let pair = |a: ElementSet, b: ElementSet| if a < b { (a, b) } else { (b, a) };
    let mut from_cliques: Vec<_> = rcg.edges.iter().map(|&(i, j)| pair(flats[i], flats[j])).collect();
    let mut from_rotunda: Vec<_> = rg.edges.iter().map(|e| pair(rot[e.i], rot[e.j])).collect();
    from_cliques.sort();
    from_rotunda.sort();
    Ok(from_cliques == from_rotunda)
}

/// `θ`: element id to its pair of graph vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplianceMap {
    pub theta: Vec<VertexSet>,
}

impl ComplianceMap {
    pub fn image(&self, x: ElementSet) -> VertexSet {
        x.iter().fold(VertexSet::EMPTY, |a, e| a | self.theta[e])
    }

    /// `θ⁻¹(U)`: elements whose pair lies inside `u`.
    pub fn preimage(&self, u: VertexSet) -> ElementSet {
        (0..self.theta.len()).filter(|&e| self.theta[e].is_subset(u)).collect()
    }
}

/// A compliant graph together with its map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompliantGraph {
    pub graph: SimpleGraph,
    pub map: ComplianceMap,
}

/// The JSON form: the graph file plus `theta` keyed by element label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompliantGraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub theta: BTreeMap<String, [String; 2]>,
}

impl CompliantGraph {
    pub fn to_file(&self, m: &Matroid) -> CompliantGraphFile {
        let g = self.graph.to_file();
        let theta = self
            .map
            .theta
            .iter()
            .enumerate()
            .map(|(e, pair)| {
                let mut vs = pair.iter().map(|v| self.graph.label(v).to_string());
                let a = vs.next().unwrap_or_default();
                let b = vs.next().unwrap_or_default();
                (m.label(e).to_string(), [a, b])
            })
            .collect();
        CompliantGraphFile {
            vertices: g.vertices,
            edges: g.edges,
            theta,
        }
    }

    pub fn from_file(m: &Matroid, file: CompliantGraphFile) -> Result<Self> {
        let graph = SimpleGraph::from_file(crate::graph::GraphFile {
            vertices: file.vertices,
            edges: file.edges,
        })?;
        let mut theta = vec![VertexSet::EMPTY; m.size()];
        for (label, pair) in &file.theta {
            let e = m.element(label)?;
            for v in pair {
                theta[e].insert(graph.vertex(v)?);
            }
        }
        Ok(CompliantGraph {
            graph,
            map: ComplianceMap { theta },
        })
    }
}

fn add_pairs(g: &mut SimpleGraph, theta: &mut [VertexSet], m: &Matroid, elements: ElementSet) -> Result<VertexSet> {
    let mut added = VertexSet::EMPTY;
    for e in elements {
        for side in 0..2 {
            let v = g.add_vertex(format!("{}#{side}", m.label(e)))?;
            theta[e].insert(v);
            added.insert(v);
        }
    }
    Ok(added)
}

fn join_clique(g: &mut SimpleGraph, new: VertexSet, attach: VertexSet) -> Result<()> {
    for u in new {
        for v in new | attach {
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(())
}

/// Builds a compliant graph for a connected supersolvable saturated matroid.
///
/// The recursion follows the first modular chain found: the bottom flat of
/// rank at most one becomes a complete graph on two vertices per element, and
/// each step up adds two vertices per element of the new cocircuit, joined to
/// each other and to `θ(cl(C*) ∩ H)`. Vertex `x#0`, `x#1` make up `θ(x)`.
pub fn compliant_graph<V: AsView + ?Sized>(m: &V) -> Result<CompliantGraph> {
    let v = m.as_view();
    if !v.is_connected()? {
        return Err(Error::Disconnected);
    }
    require_supersolvable_saturated(&v)?;
    if 2 * v.size() > crate::bitset::MAX_ELEMENTS {
        return Err(Error::TooLarge {
            what: "compliant graph",
            size: 2 * v.size(),
            bound: crate::bitset::MAX_ELEMENTS,
        });
    }
    let chain = supersolvable_chain(&v)?
        .ok_or_else(|| Error::Invariant("supersolvable matroid without a modular chain".into()))?;
    let mat = v.matroid();
    let mut theta = vec![VertexSet::EMPTY; mat.size()];
    let mut g = SimpleGraph::new(Vec::new())?;
    let base = chain.flats[chain.flats.len().min(2) - 1].elements;
    let all = add_pairs(&mut g, &mut theta, mat, base)?;
    join_clique(&mut g, all, VertexSet::EMPTY)?;
    for w in chain.flats.windows(2).skip(1) {
        let (h, f) = (w[0].elements, w[1].elements);
        let cocircuit = f - h;
        let r = v.restrict(f).closure(cocircuit);
        let attach = (r & h).iter().fold(VertexSet::EMPTY, |a, e| a | theta[e]);
        let y = add_pairs(&mut g, &mut theta, mat, cocircuit)?;
        join_clique(&mut g, y, attach)?;
    }
    Ok(CompliantGraph {
        graph: g,
        map: ComplianceMap { theta },
    })
}

/// Outcome of one compliance condition; `witness` explains a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Condition {
    fn ok() -> Self {
        Condition { holds: true, witness: None }
    }

    fn fail(witness: String) -> Self {
        Condition {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplianceReport {
    /// `G` is 2-connected and chordal.
    pub graph_shape: Condition,
    /// Every `θ(x)` has two vertices.
    pub pairs: Condition,
    /// Every vertex lies in exactly one `θ(x)`.
    pub partition: Condition,
    /// `θ(R)` is a clique for each non-empty round flat `R`.
    pub round_flats_to_cliques: Condition,
    /// `F ∪ θ⁻¹(U)` is a modular flat for each modular flat `F` and each
    /// union `U` of components of `G − θ(F)`.
    pub modular_extension: Condition,
    /// `θ` maps the rotunda onto the maximal cliques and `R(M)` onto `C_R(G)`.
    pub rotunda_to_cliques: Condition,
}

impl ComplianceReport {
    pub fn is_compliant(&self) -> bool {
        [
            &self.graph_shape,
            &self.pairs,
            &self.partition,
            &self.round_flats_to_cliques,
            &self.modular_extension,
            &self.rotunda_to_cliques,
        ]
        .iter()
        .all(|c| c.holds)
    }
}

fn check_shape(g: &SimpleGraph) -> Condition {
    if !g.is_two_connected() {
        Condition::fail("the graph is not 2-connected".into())
    } else if !is_chordal(g).is_chordal() {
        Condition::fail("the graph is not chordal".into())
    } else {
        Condition::ok()
    }
}

fn check_pairs(v: &Restriction<'_>, g: &SimpleGraph, map: &ComplianceMap) -> Condition {
    match v.ground().iter().find(|&e| map.theta[e].len() != 2) {
        Some(e) => Condition::fail(format!(
            "θ({}) = {}",
            v.matroid().label(e),
            g.format_set(map.theta[e])
        )),
        None => Condition::ok(),
    }
}

fn check_partition(v: &Restriction<'_>, g: &SimpleGraph, map: &ComplianceMap) -> Condition {
    for u in 0..g.order() {
        let owners: Vec<usize> = v.ground().iter().filter(|&e| map.theta[e].contains(u)).collect();
        if owners.len() != 1 {
            let names: Vec<&str> = owners.iter().map(|&e| v.matroid().label(e)).collect();
            return Condition::fail(format!("vertex {} lies in θ of [{}]", g.label(u), names.join(", ")));
        }
    }
    Condition::ok()
}

fn check_round(v: &Restriction<'_>, g: &SimpleGraph, map: &ComplianceMap) -> Result<Condition> {
    for f in round_flats(v)? {
        if !f.elements.is_empty() && !g.is_clique(map.image(f.elements)) {
            return Ok(Condition::fail(format!(
                "θ({}) is not a clique",
                v.matroid().format_set(f.elements)
            )));
        }
    }
    Ok(Condition::ok())
}

fn check_extension(v: &Restriction<'_>, g: &SimpleGraph, map: &ComplianceMap) -> Result<Condition> {
    crate::matroid::ensure_bound("compliance check", v.size(), COMPLIANCE_ELEMENT_BOUND)?;
    let modular = modular_flats(v)?;
    let is_modular: HashSet<ElementSet> = modular.iter().map(|f| f.elements).collect();
    for f in &modular {
        let rest = g.vertices() - map.image(f.elements);
        let comps = g.components_within(rest);
        crate::matroid::ensure_enumerable("component list", comps.len())?;
        for pick in ElementSet::full(comps.len()).subsets() {
            let u = pick.iter().fold(VertexSet::EMPTY, |a, i| a | comps[i]);
            let d = f.elements | (map.preimage(u) & v.ground());
            if !is_modular.contains(&d) {
                return Ok(Condition::fail(format!(
                    "{} ∪ θ⁻¹({}) = {} is not a modular flat",
                    v.matroid().format_set(f.elements),
                    g.format_set(u),
                    v.matroid().format_set(d)
                )));
            }
        }
    }
    Ok(Condition::ok())
}

fn check_rotunda(v: &Restriction<'_>, g: &SimpleGraph, map: &ComplianceMap) -> Result<Condition> {
    if !is_chordal(g).is_chordal() {
        return Ok(Condition::fail("the graph is not chordal".into()));
    }
    let rg = rotunda_graph(v, &Weighting::Rank)?;
    let rcg = reduced_clique_graph(g, &Weighting::Cardinality)?;
    let mut index = Vec::with_capacity(rg.rotunda.len());
    for r in &rg.rotunda {
        let image = map.image(r.elements);
        match rcg.cliques.iter().position(|&c| c == image) {
            Some(i) => index.push(i),
            None => {
                return Ok(Condition::fail(format!(
                    "θ({}) = {} is not a maximal clique",
                    v.matroid().format_set(r.elements),
                    g.format_set(image)
                )))
            }
        }
    }
    let mut hit = index.clone();
    hit.sort();
    hit.dedup();
    if hit.len() != index.len() || hit.len() != rcg.cliques.len() {
        return Ok(Condition::fail(format!(
            "{} rotunda against {} maximal cliques",
            rg.rotunda.len(),
            rcg.cliques.len()
        )));
    }
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut mapped: Vec<(usize, usize)> = rg.edges.iter().map(|e| norm(index[e.i], index[e.j])).collect();
    mapped.sort();
    if mapped != rcg.edges {
        return Ok(Condition::fail("θ does not carry R(M) onto C_R(G)".into()));
    }
    Ok(Condition::ok())
}

/// Evaluates every compliance condition for `(g, θ)` against `m`.
pub fn check_compliance<V: AsView + ?Sized>(m: &V, g: &SimpleGraph, map: &ComplianceMap) -> Result<ComplianceReport> {
    let v = m.as_view();
    if map.theta.len() != v.matroid().size() {
        return Err(Error::InvalidDecomposition(format!(
            "θ has {} entries for {} elements",
            map.theta.len(),
            v.matroid().size()
        )));
    }
    let ((graph_shape, pairs), (partition, (round, (extension, rot)))) = rayon::join(
        || (check_shape(g), check_pairs(&v, g, map)),
        || {
            rayon::join(
                || check_partition(&v, g, map),
                || {
                    rayon::join(
                        || check_round(&v, g, map),
                        || rayon::join(|| check_extension(&v, g, map), || check_rotunda(&v, g, map)),
                    )
                },
            )
        },
    );
    Ok(ComplianceReport {
        graph_shape,
        pairs,
        partition,
        round_flats_to_cliques: round?,
        modular_extension: extension?,
        rotunda_to_cliques: rot?,
    })
}

/// Disjoint union; labels are prefixed with the part index when they clash.
pub fn disjoint_union(parts: &[SimpleGraph]) -> Result<SimpleGraph> {
    let mut labels: Vec<String> = parts.iter().flat_map(|p| p.labels().iter().cloned()).collect();
    let unique: HashSet<&String> = labels.iter().collect();
    if unique.len() != labels.len() {
        labels = parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.labels().iter().map(move |l| format!("{i}:{l}")))
            .collect();
    }
    let mut out = SimpleGraph::new(labels)?;
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            out.add_edge(u + offset, v + offset)?;
        }
        offset += p.order();
    }
    Ok(out)
}

/// A supersolvable saturated matroid whose rotunda graph is isomorphic to
/// `C_R(g)`: each component is twinned to 2-connectivity and its cycle
/// matroids are summed. Components with a single vertex stand in as `K_2`.
pub fn matroid_for_chordal_graph(g: &SimpleGraph) -> Result<Matroid> {
    if !is_chordal(g).is_chordal() {
        return Err(Error::NotChordal);
    }
    let mut parts = Vec::new();
    for comp in g.components() {
        let h = if comp.len() == 1 {
            SimpleGraph::complete(2)
        } else {
            g.induced(comp)
        };
        parts.push(graphic_matroid(&two_connectivize(&h)?));
    }
    if parts.len() == 1 {
        return Ok(parts.pop().expect("one part"));
    }
    Matroid::direct_sum(parts)
}

/// A chordal graph whose reduced clique graph is isomorphic to `R(m)`: the
/// disjoint union of compliant graphs of the components once loops are
/// deleted. A matroid of loops gives a single vertex.
pub fn chordal_graph_for_matroid<V: AsView + ?Sized>(m: &V) -> Result<SimpleGraph> {
    let v = m.as_view();
    require_supersolvable_saturated(&v)?;
    let loopless = v.restrict(v.ground() - v.loops());
    if loopless.size() == 0 {
        return Ok(SimpleGraph::with_order(1));
    }
    let mut parts = Vec::new();
    for comp in loopless.connected_components()? {
        let sub = v.restrict(comp).to_matroid()?;
        parts.push(compliant_graph(&sub)?.graph);
    }
    disjoint_union(&parts)
}

/// Builds the matroid for a chordal graph and checks `R(M) ≅ C_R(G)`.
pub fn roundtrip_from_graph(g: &SimpleGraph) -> Result<bool> {
    let m = matroid_for_chordal_graph(g)?;
    let rcg = reduced_clique_graph(g, &Weighting::Cardinality)?.to_graph();
    let rg = rotunda_graph(&m, &Weighting::Rank)?.to_graph();
    Ok(find_isomorphism(&rcg, &rg).is_some())
}

/// Builds the chordal graph for a matroid and checks `C_R(G) ≅ R(M)`.
pub fn roundtrip_from_matroid<V: AsView + ?Sized>(m: &V) -> Result<bool> {
    let v = m.as_view();
    let g = chordal_graph_for_matroid(&v)?;
    let rg = rotunda_graph(&v, &Weighting::Rank)?.to_graph();
    let rcg = reduced_clique_graph(&g, &Weighting::Cardinality)?.to_graph();
    Ok(find_isomorphism(&rcg, &rg).is_some())
}

/// Maximal cliques of `g` as edge-set flats of `M(G)`; these are the rotunda.
pub fn clique_flats(g: &SimpleGraph) -> Result<Vec<ElementSet>> {
    let mut out: Vec<ElementSet> = maximal_cliques(g)?
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| clique_edge_set(g, c))
        .collect();
    out.sort();
    Ok(out)
}

/// Checks that the rotunda of `M(G)` are the edge sets of the maximal cliques
/// with at least two vertices.
pub fn rotunda_are_clique_edge_sets(g: &SimpleGraph) -> Result<bool> {
    let m = graphic_matroid(g);
    let mut rot: Vec<ElementSet> = rotunda(&m)?.into_iter().map(|r| r.elements).collect();
    rot.sort();
    let mut cliques = clique_flats(g)?;
    if g.edge_count() == 0 {
        cliques = vec![ElementSet::EMPTY];
    }
    Ok(rot == cliques)
}

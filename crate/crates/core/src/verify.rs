//! Property suites run over the catalog. Each check returns the number of
//! cases it examined and every counterexample it met.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::classification::{classify, is_modular_chain, is_saturated, is_supersolvable, supersolvable_chain};
use crate::correspondence::{
    check_compliance, check_rcg_equals_rotunda_graph, clique_edge_set, compliant_graph, disjoint_union, graphic_matroid,
    roundtrip_from_graph, roundtrip_from_matroid, two_connectivize,
};
use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic_brute_force, find_isomorphism, is_chordal, maximal_cliques, reduced_clique_graph, SimpleGraph,
};
use crate::matroid::{catalog, CatalogEntry, Flat, Matroid, Restriction, GRAPH_ORDER_LIMIT};
use crate::modularity::{is_modular_flat, modular_covers, modular_flats, modular_hyperplanes};
use crate::rotunda_graph::{is_rotunda_tree, modular_cover_of_tree_edge, rotunda_graph, RotundaTree};
use crate::roundness::{is_round, round_flats, rotunda, vertical_separations};
use crate::trees::{has_subtree_property, max_weight_spanning_trees, spanning_trees, tree_from_edges, unlabeled_trees, Tree};
use crate::treewidth::{brute_force_treewidth, min_strict_width, node_width, rotunda_treewidth, round_flat_lower_bound, width, TreeDecomposition};
use crate::weighting::Weighting;

/// Stored counterexamples per check; the count keeps going past this.
const WITNESS_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Axioms,
    ModularityLemmas,
    RoundnessLemmas,
    Venn,
    Correspondence,
    Trees,
    Treewidth,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Axioms,
        Suite::ModularityLemmas,
        Suite::RoundnessLemmas,
        Suite::Venn,
        Suite::Correspondence,
        Suite::Trees,
        Suite::Treewidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::ModularityLemmas => "modularity-lemmas",
            Suite::RoundnessLemmas => "roundness-lemmas",
            Suite::Venn => "venn",
            Suite::Correspondence => "correspondence",
            Suite::Trees => "trees",
            Suite::Treewidth => "treewidth",
        }
    }

    /// Default largest ground set for the matroid checks of this suite.
    pub fn default_max_elements(self) -> usize {
        match self {
            Suite::Axioms | Suite::ModularityLemmas | Suite::RoundnessLemmas | Suite::Venn => 8,
            Suite::Correspondence | Suite::Trees => 10,
            Suite::Treewidth => 12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Parse(format!("unknown suite `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Limits for a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_elements: usize,
    pub graph_order: usize,
}

impl VerifyOptions {
    pub fn for_suite(suite: Suite) -> Self {
        VerifyOptions {
            max_elements: suite.default_max_elements(),
            graph_order: 6,
        }
    }
}

/// Per-case outcome: cases looked at and counterexamples found.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

fn finish(name: &'static str, t: Tally) -> CheckResult {
    let failures = t.failures.len();
    let mut counterexamples = t.failures;
    counterexamples.truncate(WITNESS_LIMIT);
    CheckResult {
        name,
        cases: t.cases,
        failures,
        counterexamples,
    }
}

/// Runs `f` on every item in parallel and merges in input order.
fn over<T: Sync>(name: &'static str, items: &[T], f: impl Fn(&T, &mut Tally) -> Result<()> + Sync) -> Result<CheckResult> {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t).map(|_| t)
        })
        .collect::<Result<_>>()?;
    Ok(finish(name, parts.into_iter().fold(Tally::default(), Tally::merge)))
}

fn label(e: &CatalogEntry) -> &str {
    &e.name
}

fn fmt_set(m: &Matroid, s: ElementSet) -> String {
    m.format_set(s)
}

/// Catalog entries with at most `max_elements` elements, graphs on at most
/// `graph_order` vertices.
pub fn matroids(max_elements: usize, graph_order: usize) -> Vec<CatalogEntry> {
    catalog(graph_order.min(GRAPH_ORDER_LIMIT))
        .into_iter()
        .filter(|e| e.matroid.size() <= max_elements)
        .collect()
}

/// Connected simple graphs on at most `order` vertices.
pub fn graphs(order: usize) -> Vec<SimpleGraph> {
    crate::matroid::connected_graphs(order)
}

/// `r(F) + r(G) = r(F ∪ G) + r(F ∩ G)` for every flat `G`.
pub fn lattice_modular(v: &Restriction<'_>, f: ElementSet) -> Result<bool> {
    Ok(v.all_flats()?
        .iter()
        .all(|g| v.rank(f) + g.rank == v.rank(f | g.elements) + v.rank(f & g.elements)))
}

/// Union of the projections onto `h` of non-parallel pairs from `x`.
pub fn projection_union(v: &Restriction<'_>, h: ElementSet, x: ElementSet) -> ElementSet {
    let mut p = ElementSet::EMPTY;
    for a in x {
        for b in x.iter().filter(|&b| b > a) {
            let pair = ElementSet::singleton(a).with(b);
            if v.rank(pair) == 2 {
                p = p | (v.closure(pair) & h);
            }
        }
    }
    p
}

/// Runs one suite.
pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Axioms => axioms(opts)?,
        Suite::ModularityLemmas => modularity_lemmas(opts)?,
        Suite::RoundnessLemmas => roundness_lemmas(opts)?,
        Suite::Venn => venn(opts)?,
        Suite::Correspondence => correspondence(opts)?,
        Suite::Trees => tree_checks(opts)?,
        Suite::Treewidth => treewidth_checks(opts)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn axioms(o: VerifyOptions) -> Result<Vec<CheckResult>> {
    let ms = matroids(o.max_elements, GRAPH_ORDER_LIMIT);
    let mut out = Vec::new();
    out.push(over("rank is bounded, monotone and submodular", &ms, |e, t| {
        let m = &e.matroid;
        let all: Vec<ElementSet> = m.ground().subsets().collect();
        for &x in &all {
            let r = m.rank(x);
            t.case(r <= x.len(), || format!("{}: r({}) = {r}", label(e), fmt_set(m, x)));
            for add in m.ground() - x {
                t.case(m.rank(x.with(add)) >= r && m.rank(x.with(add)) <= r + 1, || {
                    format!("{}: adding {} to {} changes rank badly", label(e), m.label(add), fmt_set(m, x))
                });
            }
        }
        for &x in &all {
            for &y in &all {
                if x.bits() <= y.bits() {
                    t.case(m.rank(x) + m.rank(y) >= m.rank(x | y) + m.rank(x & y), || {
                        format!("{}: submodularity fails on {} and {}", label(e), fmt_set(m, x), fmt_set(m, y))
                    });
                }
            }
        }
        Ok(())
    })?);
    out.push(over("closure is extensive, idempotent and monotone", &ms, |e, t| {
        let m = &e.matroid;
        for x in m.ground().subsets() {
            let c = m.closure(x);
            t.case(x.is_subset(c) && m.closure(c) == c, || {
                format!("{}: cl({}) = {}", label(e), fmt_set(m, x), fmt_set(m, c))
            });
            for add in m.ground() - x {
                t.case(c.is_subset(m.closure(x.with(add))), || {
                    format!("{}: closure not monotone at {} + {}", label(e), fmt_set(m, x), m.label(add))
                });
            }
        }
        Ok(())
    })?);
    out.push(over("circuits are minimal dependent sets", &ms, |e, t| {
        let m = &e.matroid;
        for c in m.circuits()? {
            let ok = m.rank(c) + 1 == c.len() && c.iter().all(|x| m.is_independent(c.without(x)));
            t.case(ok, || format!("{}: {} is not minimal dependent", label(e), fmt_set(m, c)));
        }
        Ok(())
    })?);
    out.push(over("direct-sum rank is the sum of part ranks", &ms, |e, t| {
        let m = &e.matroid;
        let parts = m.part_grounds();
        if parts.is_empty() {
            return Ok(());
        }
        for x in m.ground().subsets() {
            let sum: usize = parts.iter().map(|&p| m.rank(x & p)).sum();
            t.case(sum == m.rank(x), || format!("{}: r({}) differs from the part sum", label(e), fmt_set(m, x)));
        }
        Ok(())
    })?);
    let k33 = [crate::matroid::k33_dual()];
    out.push(over("bond matroid circuits are the minimal edge cuts", &k33, |m, t| {
        let g = crate::matroid::k33();
        let cuts = crate::matroid::minimal_cuts(&g, &g.edges());
        t.case(m.circuits()? == cuts, || "M*(K33): circuits differ from the minimal cuts".into());
        Ok(())
    })?);
    Ok(out)
}

/// Modular hyperplanes of `v` with their complementary cocircuits.
fn hyperplane_pairs(v: &Restriction<'_>) -> Result<Vec<(Flat, ElementSet)>> {
    Ok(modular_hyperplanes(v)?
        .into_iter()
        .map(|h| (h, v.ground() - h.elements))
        .collect())
}

fn modularity_lemmas(o: VerifyOptions) -> Result<Vec<CheckResult>> {
    let ms = matroids(o.max_elements, GRAPH_ORDER_LIMIT);
    let small = matroids(o.max_elements.min(7), GRAPH_ORDER_LIMIT);
    let mut out = Vec::new();
    out.push(over("modular flats agree with the lattice identity", &ms, |e, t| {
        let v = e.matroid.view();
        let modular: BTreeSet<Flat> = modular_flats(&v)?.into_iter().collect();
        for f in v.all_flats()?.iter() {
            let expect = lattice_modular(&v, f.elements)?;
            t.case(modular.contains(f) == expect, || {
                format!("{}: {} modularity disagrees", label(e), fmt_set(&e.matroid, f.elements))
            });
        }
        Ok(())
    })?);
    out.push(over("modular hyperplanes meet every line", &ms, |e, t| {
        let v = e.matroid.view();
        let listed: BTreeSet<Flat> = modular_hyperplanes(&v)?.into_iter().collect();
        for h in v.hyperplanes()? {
            let expect = lattice_modular(&v, h.elements)?;
            t.case(listed.contains(&h) == expect, || {
                format!("{}: hyperplane {} disagrees", label(e), fmt_set(&e.matroid, h.elements))
            });
        }
        Ok(())
    })?);
    out.push(over("intersections of modular flats are modular", &ms, |e, t| {
        let v = e.matroid.view();
        let modular = modular_flats(&v)?;
        let set: BTreeSet<ElementSet> = modular.iter().map(|f| f.elements).collect();
        for (i, a) in modular.iter().enumerate() {
            for b in &modular[i..] {
                let x = a.elements & b.elements;
                t.case(set.contains(&x), || {
                    format!("{}: {} ∩ {} is not modular", label(e), fmt_set(&e.matroid, a.elements), fmt_set(&e.matroid, b.elements))
                });
            }
        }
        Ok(())
    })?);
    out.push(over("modular flats stay modular in restrictions", &ms, |e, t| {
        let v = e.matroid.view();
        for f in modular_flats(&v)? {
            for extra in (v.ground() - f.elements).subsets() {
                let x = f.elements | extra;
                let ok = is_modular_flat(&v.restrict(x), f.elements)?;
                t.case(ok, || {
                    format!("{}: {} is not modular in M|{}", label(e), fmt_set(&e.matroid, f.elements), fmt_set(&e.matroid, x))
                });
            }
        }
        Ok(())
    })?);
    out.push(over("circuits crossing a modular flat reach it from outside", &ms, |e, t| {
        let v = e.matroid.view();
        let circuits = v.circuits()?;
        for f in modular_flats(&v)? {
            for &c in &circuits {
                if c.intersects(f.elements) && !c.is_subset(f.elements) {
                    let ok = !(v.closure(c - f.elements) & f.elements - v.loops()).is_empty();
                    t.case(ok, || {
                        format!("{}: F = {}, C = {}", label(e), fmt_set(&e.matroid, f.elements), fmt_set(&e.matroid, c))
                    });
                }
            }
        }
        Ok(())
    })?);
    out.push(over("projections determine closures inside a modular hyperplane", &small, |e, t| {
        let v = e.matroid.view();
        for (h, cocircuit) in hyperplane_pairs(&v)? {
            for x in cocircuit.subsets() {
                let p = projection_union(&v, h.elements, x);
                for extra in (h.elements - p).subsets() {
                    let u = p | extra;
                    let ok = v.closure(u) == v.closure(u | x) & h.elements;
                    t.case(ok, || {
                        format!("{}: H = {}, X = {}, U = {}", label(e), fmt_set(&e.matroid, h.elements), fmt_set(&e.matroid, x), fmt_set(&e.matroid, u))
                    });
                }
            }
        }
        Ok(())
    })?);
    out.push(over("modular hyperplanes of connected matroids are connected", &ms, |e, t| {
        let v = e.matroid.view();
        if !v.is_connected()? {
            return Ok(());
        }
        for (h, _) in hyperplane_pairs(&v)? {
            let ok = v.restrict(h.elements).is_connected()?;
            t.case(ok, || format!("{}: M|{} is disconnected", label(e), fmt_set(&e.matroid, h.elements)));
        }
        Ok(())
    })?);
    Ok(out)
}

fn roundness_lemmas(o: VerifyOptions) -> Result<Vec<CheckResult>> {
    let ms = matroids(o.max_elements, GRAPH_ORDER_LIMIT);
    let small = matroids(o.max_elements.min(7), GRAPH_ORDER_LIMIT);
    let mut out = Vec::new();
    out.push(over("roundness agrees with the bipartition test", &ms, |e, t| {
        let m = &e.matroid;
        let v = m.view();
        let round: BTreeSet<Flat> = round_flats(&v)?.into_iter().collect();
        for f in v.all_flats()?.iter() {
            let r = f.rank;
            let expect = f.elements.subsets().all(|u| m.rank(u) == r || m.rank(f.elements - u) == r);
            t.case(round.contains(f) == expect, || format!("{}: {} roundness disagrees", label(e), fmt_set(m, f.elements)));
        }
        Ok(())
    })?);
    out.push(over("certifying covers separate distinct rotunda", &ms, |e, t| {
        let v = e.matroid.view();
        let rot = rotunda(&v)?;
        let covers = vertical_separations(&v)?;
        for (i, r1) in rot.iter().enumerate() {
            for (j, r2) in rot.iter().enumerate() {
                if i == j {
                    continue;
                }
                let meet = r1.elements & r2.elements;
                for c in &covers {
                    for (f1, f2) in [(c.first.elements, c.second.elements), (c.second.elements, c.first.elements)] {
                        if r1.elements.is_subset(f1) && r2.elements.is_subset(f2) && f1 & f2 == meet {
                            let ok = !r1.elements.is_subset(f2) && !r2.elements.is_subset(f1);
                            t.case(ok, || format!("{}: rotunda {} and {}", label(e), fmt_set(&e.matroid, r1.elements), fmt_set(&e.matroid, r2.elements)));
                        }
                    }
                }
            }
        }
        Ok(())
    })?);
    out.push(over("projections onto a modular hyperplane are round", &small, |e, t| {
        let v = e.matroid.view();
        for (h, cocircuit) in hyperplane_pairs(&v)? {
            for x in cocircuit.subsets() {
                let p = projection_union(&v, h.elements, x);
                t.case(is_round(&v, p)?, || {
                    format!("{}: H = {}, X = {}", label(e), fmt_set(&e.matroid, h.elements), fmt_set(&e.matroid, x))
                });
            }
        }
        Ok(())
    })?);
    out.push(over("vertical covers of a modular hyperplane lift", &ms, |e, t| {
        let v = e.matroid.view();
        for (h, cocircuit) in hyperplane_pairs(&v)? {
            let p = projection_union(&v, h.elements, cocircuit);
            let sub = v.restrict(h.elements);
            let modular_sub: BTreeSet<ElementSet> = modular_flats(&sub)?.iter().map(|f| f.elements).collect();
            for c in vertical_separations(&sub)? {
                let sides = [c.first.elements, c.second.elements];
                let hosts: Vec<usize> = (0..2).filter(|&i| p.is_subset(sides[i])).collect();
                t.case(!hosts.is_empty(), || format!("{}: no side holds the projections", label(e)));
                let modular_cover = sides.iter().all(|s| modular_sub.contains(s));
                for i in hosts {
                    let (a, b) = (sides[i] | cocircuit, sides[1 - i]);
                    let ground = v.ground();
                    let vertical = v.is_flat(a) && v.is_flat(b) && a != ground && b != ground && a | b == ground;
                    let modular = !modular_cover || (is_modular_flat(&v, a)? && is_modular_flat(&v, b)?);
                    t.case(vertical && modular, || {
                        format!("{}: lifting ({}, {})", label(e), fmt_set(&e.matroid, sides[0]), fmt_set(&e.matroid, sides[1]))
                    });
                }
            }
        }
        Ok(())
    })?);
    out.push(over("modular covers restrict to a modular hyperplane", &ms, |e, t| {
        let v = e.matroid.view();
        let covers = modular_covers(&v)?;
        for (h, _) in hyperplane_pairs(&v)? {
            let sub = v.restrict(h.elements);
            for c in &covers {
                for (f, f2) in [(c.first.elements, c.second.elements), (c.second.elements, c.first.elements)] {
                    if f2.is_subset(h.elements) && f2 != h.elements {
                        let ok = crate::modularity::is_modular_cover(&sub, f & h.elements, f2 & h.elements)?;
                        t.case(ok, || format!("{}: ({}, {}) restricted", label(e), fmt_set(&e.matroid, f), fmt_set(&e.matroid, f2)));
                    }
                }
            }
        }
        Ok(())
    })?);
    out.push(over("round flats off a modular hyperplane lie in the cocircuit closure", &ms, |e, t| {
        let v = e.matroid.view();
        let round = round_flats(&v)?;
        for (h, cocircuit) in hyperplane_pairs(&v)? {
            let r = v.closure(cocircuit);
            for f in round.iter().filter(|f| !f.elements.is_subset(h.elements)) {
                t.case(f.elements.is_subset(r), || format!("{}: {} escapes cl(C*)", label(e), fmt_set(&e.matroid, f.elements)));
            }
        }
        Ok(())
    })?);
    out.push(over("the cocircuit closure is the only rotunda off the hyperplane", &ms, |e, t| {
        let v = e.matroid.view();
        let rot = rotunda(&v)?;
        for (h, cocircuit) in hyperplane_pairs(&v)? {
            let r = v.closure(cocircuit);
            t.case(rot.iter().any(|x| x.elements == r), || format!("{}: cl(C*) = {} is not a rotunda", label(e), fmt_set(&e.matroid, r)));
            for x in rot.iter().filter(|x| x.elements != r) {
                t.case(x.elements.is_subset(h.elements), || format!("{}: rotunda {} leaves H", label(e), fmt_set(&e.matroid, x.elements)));
            }
        }
        Ok(())
    })?);
    out.push(over("the cocircuit closure meets the hyperplane in a round set", &ms, |e, t| {
        let v = e.matroid.view();
        for (h, cocircuit) in hyperplane_pairs(&v)? {
            let x = v.closure(cocircuit) & h.elements;
            t.case(is_round(&v, x)?, || format!("{}: {} is not round", label(e), fmt_set(&e.matroid, x)));
        }
        Ok(())
    })?);
    out.push(over("every element lies in a rotunda", &ms, |e, t| {
        let v = e.matroid.view();
        let covered = rotunda(&v)?.iter().fold(ElementSet::EMPTY, |a, r| a | r.elements);
        t.case(covered == v.ground(), || format!("{}: {} uncovered", label(e), fmt_set(&e.matroid, v.ground() - covered)));
        Ok(())
    })?);
    Ok(out)
}

/// Supersolvability by searching chains of lattice-modular flats.
pub fn supersolvable_by_lattice(v: &Restriction<'_>) -> Result<bool> {
    let flats = v.all_flats()?;
    let mut modular = Vec::new();
    for f in flats.iter() {
        if lattice_modular(v, f.elements)? {
            modular.push(*f);
        }
    }
    fn climb(v: &Restriction<'_>, modular: &[Flat], below: Flat) -> bool {
        if below.rank == v.full_rank() {
            return true;
        }
        modular
            .iter()
            .filter(|f| f.rank == below.rank + 1 && below.elements.is_subset(f.elements))
            .any(|f| climb(v, modular, *f))
    }
    Ok(climb(v, &modular, Flat::new(v.loops(), 0)))
}

/// Direct sums of pairs of small catalog matroids.
fn small_sums(max_part: usize) -> Result<Vec<(String, Matroid, [Matroid; 2])>> {
    let parts: Vec<CatalogEntry> = catalog(4).into_iter().filter(|e| e.matroid.size() <= max_part && e.matroid.size() > 0).collect();
    let mut out = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            let sum = Matroid::direct_sum(vec![a.matroid.clone(), b.matroid.clone()])?;
            out.push((format!("{} + {}", a.name, b.name), sum, [a.matroid.clone(), b.matroid.clone()]));
        }
    }
    Ok(out)
}

fn venn(o: VerifyOptions) -> Result<Vec<CheckResult>> {
    let ms = matroids(o.max_elements, GRAPH_ORDER_LIMIT);
    let gs = graphs(o.graph_order);
    let mut out = Vec::new();
    let fixtures = [
        (crate::matroid::u36(), (false, true, false)),
        (crate::matroid::w4(), (false, false, false)),
        (crate::matroid::fano(), (true, true, true)),
        (crate::matroid::k33_dual(), (false, true, true)),
        (crate::matroid::pabx(), (true, false, true)),
    ];
    out.push(over("fixtures land in their regions", &fixtures, |(m, flags), t| {
        let p = classify(m)?;
        t.case(p.flags() == *flags, || format!("{}: got {:?}, expected {:?}", m.name().unwrap_or("?"), p.flags(), flags));
        Ok(())
    })?);
    out.push(over("classification agrees with lattice oracles", &ms, |e, t| {
        let v = e.matroid.view();
        let ss = supersolvable_by_lattice(&v)?;
        t.case(is_supersolvable(&v)? == ss, || format!("{}: supersolvability disagrees", label(e)));
        let round = round_flats(&v)?;
        let mut sat = true;
        for f in &round {
            sat &= lattice_modular(&v, f.elements)?;
        }
        t.case(is_saturated(&v)? == sat, || format!("{}: saturation disagrees", label(e)));
        if let Some(chain) = supersolvable_chain(&v)? {
            t.case(is_modular_chain(&v, &chain)?, || format!("{}: returned chain is not modular", label(e)));
        }
        Ok(())
    })?);
    out.push(over("supersolvable saturated matroids are C-chordal", &ms, |e, t| {
        let p = classify(&e.matroid)?;
        if p.supersolvable && p.saturated {
            t.case(p.c_chordal, || format!("{}: chordless circuit {:?}", label(e), p.chordless_circuit));
        }
        Ok(())
    })?);
    out.push(over("flats of saturated matroids are saturated", &ms, |e, t| {
        let v = e.matroid.view();
        if !is_saturated(&v)? {
            return Ok(());
        }
        for f in v.all_flats()?.iter() {
            t.case(is_saturated(&v.restrict(f.elements))?, || format!("{}: M|{} is not saturated", label(e), fmt_set(&e.matroid, f.elements)));
        }
        Ok(())
    })?);
    out.push(over("saturated hyperplane and cocircuit closure form a modular cover", &ms, |e, t| {
        let v = e.matroid.view();
        if !is_saturated(&v)? {
            return Ok(());
        }
        for (h, cocircuit) in hyperplane_pairs(&v)? {
            if v.rank(cocircuit) < v.full_rank() {
                let ok = crate::modularity::is_modular_cover(&v, h.elements, v.closure(cocircuit))?;
                t.case(ok, || format!("{}: H = {}", label(e), fmt_set(&e.matroid, h.elements)));
            }
        }
        Ok(())
    })?);
    let sums = small_sums(4)?;
    out.push(over("direct sums are supersolvable and saturated componentwise", &sums, |(name, sum, parts), t| {
        let ss = is_supersolvable(sum)? == (is_supersolvable(&parts[0])? && is_supersolvable(&parts[1])?);
        let sat = is_saturated(sum)? == (is_saturated(&parts[0])? && is_saturated(&parts[1])?);
        t.case(ss && sat, || format!("{name}: supersolvable {ss}, saturated {sat}"));
        Ok(())
    })?);
    out.push(over("supersolvable matroids have at most r(M) rotunda", &ms, |e, t| {
        let v = e.matroid.view();
        if is_supersolvable(&v)? {
            let k = rotunda(&v)?.len();
            t.case(k <= v.full_rank().max(1), || format!("{}: {k} rotunda, rank {}", label(e), v.full_rank()));
        }
        Ok(())
    })?);
    out.push(over("round flats of a cycle matroid are clique edge sets", &gs, |g, t| {
        let m = graphic_matroid(g);
        let edges = g.edges();
        for f in m.flats(None)? {
            let touched = f.elements.iter().fold(ElementSet::EMPTY, |a, i| a.with(edges[i].0).with(edges[i].1));
            let clique = f.elements.is_empty() || (g.is_clique(touched) && clique_edge_set(g, touched) == f.elements);
            t.case(is_round(&m, f.elements)? == clique, || format!("{}: flat {}", g.to_json(), m.format_set(f.elements)));
        }
        Ok(())
    })?);
    out.push(over("cycle matroids are saturated", &gs, |g, t| {
        t.case(is_saturated(&graphic_matroid(g))?, || g.to_json());
        Ok(())
    })?);
    out.push(over("chordal graphs are exactly the supersolvable cycle matroids", &gs, |g, t| {
        let chordal = is_chordal(g).is_chordal();
        t.case(chordal == is_supersolvable(&graphic_matroid(g))?, || g.to_json());
        Ok(())
    })?);
    Ok(out)
}

fn is_sss(v: &Restriction<'_>) -> Result<bool> {
    Ok(is_supersolvable(v)? && is_saturated(v)?)
}

type Adjacency = BTreeSet<(ElementSet, ElementSet)>;

fn rotunda_adjacency(v: &Restriction<'_>) -> Result<(BTreeSet<ElementSet>, Adjacency)> {
    let rg = rotunda_graph(v, &Weighting::Rank)?;
    let nodes = rg.rotunda.iter().map(|r| r.elements).collect();
    let edges = rg
        .edges
        .iter()
        .map(|e| {
            let (a, b) = (rg.rotunda[e.i].elements, rg.rotunda[e.j].elements);
            (a.min(b), a.max(b))
        })
        .collect();
    Ok((nodes, edges))
}

/// Walks every chain of modular hyperplanes with supersolvable restrictions
/// and checks how the rotunda graph changes at each step.
fn hyperplane_steps(v: &Restriction<'_>, seen: &mut HashMap<ElementSet, ()>, t: &mut Tally, name: &str) -> Result<()> {
    if seen.insert(v.ground(), ()).is_some() || v.full_rank() == 0 {
        return Ok(());
    }
    let (nodes, edges) = rotunda_adjacency(v)?;
    for (h, cocircuit) in hyperplane_pairs(v)? {
        let sub = v.restrict(h.elements);
        if !is_supersolvable(&sub)? {
            continue;
        }
        let r = v.closure(cocircuit);
        let low = r & h.elements;
        let (sub_nodes, sub_edges) = rotunda_adjacency(&sub)?;
        let relabel = sub_nodes.contains(&low);
        let map = |x: ElementSet| if x == r { low } else { x };
        let (want_nodes, want_edges): (BTreeSet<ElementSet>, Adjacency) = if relabel {
            (
                nodes.iter().map(|&x| map(x)).collect(),
                edges.iter().map(|&(a, b)| (map(a).min(map(b)), map(a).max(map(b)))).collect(),
            )
        } else {
            (
                nodes.iter().copied().filter(|&x| x != r).collect(),
                edges.iter().copied().filter(|&(a, b)| a != r && b != r).collect(),
            )
        };
        t.case(want_nodes == sub_nodes && want_edges == sub_edges, || {
            format!("{name}: stepping down to {}", v.matroid().format_set(h.elements))
        });
        hyperplane_steps(&sub, seen, t, name)?;
    }
    Ok(())
}

fn chordal_graphs(order: usize) -> Vec<SimpleGraph> {
    graphs(order).into_iter().filter(|g| is_chordal(g).is_chordal()).collect()
}

fn correspondence(o: VerifyOptions) -> Result<Vec<CheckResult>> {
    let ms = matroids(o.max_elements, GRAPH_ORDER_LIMIT);
    let gs = graphs(o.graph_order);
    let chordal = chordal_graphs(o.graph_order);
    let mut out = Vec::new();
    out.push(over("rotunda of a cycle matroid are the maximal clique edge sets", &gs, |g, t| {
        t.case(crate::correspondence::rotunda_are_clique_edge_sets(g)?, || g.to_json());
        Ok(())
    })?);
    out.push(over("2-connected chordal graphs: reduced clique graph is the rotunda graph", &chordal, |g, t| {
        if g.is_two_connected() {
            t.case(check_rcg_equals_rotunda_graph(g)?, || g.to_json());
        }
        Ok(())
    })?);
    out.push(over("twinning cut-vertices keeps the reduced clique graph", &chordal, |g, t| {
        let h = two_connectivize(g)?;
        let a = reduced_clique_graph(g, &Weighting::Cardinality)?.to_graph();
        let b = reduced_clique_graph(&h, &Weighting::Cardinality)?.to_graph();
        let ok = h.is_two_connected() && is_chordal(&h).is_chordal() && find_isomorphism(&a, &b).is_some();
        t.case(ok, || g.to_json());
        Ok(())
    })?);
    let sss: Vec<&CatalogEntry> = ms
        .iter()
        .filter(|e| is_sss(&e.matroid.view()).unwrap_or(false))
        .collect();
    out.push(over("compliant graphs satisfy every condition", &sss, |e, t| {
        let v = e.matroid.view();
        if v.size() == 0 || !v.is_connected()? {
            return Ok(());
        }
        let c = compliant_graph(&v)?;
        let report = check_compliance(&v, &c.graph, &c.map)?;
        let rg = rotunda_graph(&v, &Weighting::Rank)?.to_graph();
        let rcg = reduced_clique_graph(&c.graph, &Weighting::Cardinality)?.to_graph();
        let ok = report.is_compliant() && find_isomorphism(&rg, &rcg).is_some();
        t.case(ok, || format!("{}: {:?}", label(e), report));
        Ok(())
    })?);
    out.push(over("matroid to graph round trip", &sss, |e, t| {
        t.case(roundtrip_from_matroid(&e.matroid)?, || label(e).to_string());
        Ok(())
    })?);
    let mut pairs: Vec<SimpleGraph> = chordal.clone();
    let tiny = chordal_graphs(4);
    for (i, a) in tiny.iter().enumerate() {
        for b in &tiny[i..] {
            pairs.push(disjoint_union(&[a.clone(), b.clone()])?);
        }
    }
    out.push(over("graph to matroid round trip", &pairs, |g, t| {
        match roundtrip_from_graph(g) {
            Err(Error::TooLarge { .. }) => {}
            r => t.case(r?, || g.to_json()),
        }
        Ok(())
    })?);
    out.push(over("reduced clique graphs of disjoint unions are disjoint unions", &tiny, |a, t| {
        for b in &tiny {
            let union = disjoint_union(&[a.clone(), b.clone()])?;
            let whole = reduced_clique_graph(&union, &Weighting::Cardinality)?.to_graph();
            let parts = disjoint_union(&[
                reduced_clique_graph(a, &Weighting::Cardinality)?.to_graph(),
                reduced_clique_graph(b, &Weighting::Cardinality)?.to_graph(),
            ])?;
            t.case(find_isomorphism(&whole, &parts).is_some(), || union.to_json());
        }
        Ok(())
    })?);
    out.push(over("rotunda graphs of loopless direct sums are disjoint unions", &sss, |e, t| {
        let v = e.matroid.view();
        let comps = v.connected_components()?;
        if comps.len() < 2 || !v.loops().is_empty() {
            return Ok(());
        }
        let (nodes, edges) = rotunda_adjacency(&v)?;
        let mut want_nodes = BTreeSet::new();
        let mut want_edges = BTreeSet::new();
        for c in comps {
            let (n, ed) = rotunda_adjacency(&v.restrict(c))?;
            want_nodes.extend(n);
            want_edges.extend(ed);
        }
        t.case(nodes == want_nodes && edges == want_edges, || label(e).to_string());
        Ok(())
    })?);
    out.push(over("rotunda graph is connected exactly when a loopless matroid is", &sss, |e, t| {
        let v = e.matroid.view();
        if v.size() == 0 || !v.loops().is_empty() {
            return Ok(());
        }
        let connected = rotunda_graph(&v, &Weighting::Rank)?.to_graph().is_connected();
        t.case(connected == v.is_connected()?, || label(e).to_string());
        Ok(())
    })?);
    out.push(over("stepping down a modular hyperplane relabels or deletes one rotunda", &sss, |e, t| {
        let mut seen = HashMap::new();
        hyperplane_steps(&e.matroid.view(), &mut seen, t, label(e))
    })?);
    let iso_graphs = graphs(o.graph_order.min(6));
    let mut groups: BTreeMap<(usize, usize), Vec<&SimpleGraph>> = BTreeMap::new();
    for g in &iso_graphs {
        groups.entry((g.order(), g.edge_count())).or_default().push(g);
    }
    let groups: Vec<Vec<&SimpleGraph>> = groups.into_values().collect();
    out.push(over("isomorphism search agrees with permutation search", &groups, |group, t| {
        for a in group {
            for b in group {
                let fast = find_isomorphism(a, b).is_some();
                t.case(fast == are_isomorphic_brute_force(a, b), || format!("{} vs {}", a.to_json(), b.to_json()));
            }
        }
        Ok(())
    })?);
    let big = [
        (SimpleGraph::cycle(8), disjoint_union(&[SimpleGraph::cycle(4), SimpleGraph::cycle(4)])?),
        (SimpleGraph::cycle(8), relabel_reversed(&SimpleGraph::cycle(8))),
        (SimpleGraph::path(8), relabel_reversed(&SimpleGraph::path(8))),
    ];
    out.push(over("isomorphism search agrees on eight vertices", &big, |(a, b), t| {
        t.case(find_isomorphism(a, b).is_some() == are_isomorphic_brute_force(a, b), || a.to_json());
        Ok(())
    })?);
    Ok(out)
}

fn relabel_reversed(g: &SimpleGraph) -> SimpleGraph {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (n - 1 - u, n - 1 - v)).collect();
    SimpleGraph::from_edges(n, &edges).expect("relabelled edges are valid")
}

/// Spanning trees of `(k, edges)` passing `keep`, as sorted edge-index lists.
fn filtered_trees(k: usize, edges: &[(usize, usize)], keep: impl Fn(&Tree) -> Result<bool>) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for picked in spanning_trees(k, edges) {
        if keep(&tree_from_edges(k, edges, &picked)?)? {
            out.push(picked);
        }
    }
    Ok(out)
}

fn every_edge_used(edges: usize, trees: &[Vec<usize>]) -> bool {
    let used: BTreeSet<usize> = trees.iter().flatten().copied().collect();
    used.len() == edges
}

fn squared_table(sets: impl IntoIterator<Item = ElementSet>) -> Weighting {
    let mut table: BTreeMap<ElementSet, u64> = sets.into_iter().map(|s| (s, (s.len() * s.len()) as u64)).collect();
    table.insert(ElementSet::EMPTY, 0);
    Weighting::Table(table)
}

fn tree_checks(o: VerifyOptions) -> Result<Vec<CheckResult>> {
    let chordal: Vec<SimpleGraph> = chordal_graphs(o.graph_order);
    let ms = matroids(o.max_elements, GRAPH_ORDER_LIMIT);
    let mut out = Vec::new();
    out.push(over("clique trees are the maximum-weight spanning trees", &chordal, |g, t| {
        let cliques = maximal_cliques(g)?;
        let meets: Vec<ElementSet> = (0..cliques.len())
            .flat_map(|i| (i + 1..cliques.len()).map(move |j| (i, j)))
            .map(|(i, j)| cliques[i] & cliques[j])
            .collect();
        for sigma in [Weighting::Cardinality, squared_table(meets)] {
            let rcg = reduced_clique_graph(g, &sigma)?;
            let k = rcg.cliques.len();
            let found = filtered_trees(k, &rcg.edges, |tree| Ok(has_subtree_property(tree, &rcg.cliques)))?;
            let best = max_weight_spanning_trees(k, &rcg.edges, &rcg.weights);
            let ok = found == best && every_edge_used(rcg.edges.len(), &found) && rcg.to_graph().is_connected();
            t.case(ok, || format!("{} under {}", g.to_json(), sigma.name()));
        }
        Ok(())
    })?);
    let connected_sss: Vec<&CatalogEntry> = ms
        .iter()
        .filter(|e| {
            let v = e.matroid.view();
            v.is_connected().unwrap_or(false) && is_sss(&v).unwrap_or(false)
        })
        .collect();
    out.push(over("rotunda trees are the maximum-weight spanning trees", &connected_sss, |e, t| {
        let v = e.matroid.view();
        let rot = rotunda(&v)?;
        if rot.len() > crate::rotunda_graph::ROTUNDA_TREE_ENUMERATION_BOUND {
            return Ok(());
        }
        for sigma in [Weighting::Rank, Weighting::Cardinality] {
            let rg = rotunda_graph(&v, &sigma)?;
            let k = rg.rotunda.len();
            let pairs = rg.edge_pairs();
            let found = filtered_trees(k, &pairs, |tree| is_rotunda_tree(&v, tree, &rg.rotunda))?;
            let best = max_weight_spanning_trees(k, &pairs, &rg.weights());
            let ok = found == best && every_edge_used(pairs.len(), &found);
            t.case(ok, || format!("{} under {}", label(e), sigma.name()));
        }
        Ok(())
    })?);
    out.push(over("rotunda tree edges split the matroid into a modular cover", &connected_sss, |e, t| {
        let v = e.matroid.view();
        let rot = rotunda(&v)?;
        if rot.len() > crate::rotunda_graph::ROTUNDA_TREE_ENUMERATION_BOUND {
            return Ok(());
        }
        for rt in crate::rotunda_graph::rotunda_trees(&v, &Weighting::Rank)? {
            for &edge in rt.tree.edges() {
                let ok = modular_cover_of_tree_edge(&v, &rt, edge).is_ok();
                t.case(ok, || format!("{}: tree edge {:?}", label(e), edge));
            }
        }
        Ok(())
    })?);
    out.push(over("default weightings are legitimate", &connected_sss, |e, t| {
        let v = e.matroid.view();
        let rot = rotunda(&v)?;
        let meets: Vec<ElementSet> = (0..rot.len())
            .flat_map(|i| (i + 1..rot.len()).map(move |j| (i, j)))
            .map(|(i, j)| rot[i].elements & rot[j].elements)
            .collect();
        for sigma in [Weighting::Rank, Weighting::Cardinality] {
            let ok = sigma.check_legitimate(&meets, |x| sigma.weigh(v.matroid(), x)).is_ok();
            t.case(ok, || format!("{} under {}", label(e), sigma.name()));
        }
        Ok(())
    })?);
    Ok(out)
}

/// Widths of every node of a rotunda tree.
fn rotunda_tree_widths(v: &Restriction<'_>, rt: &RotundaTree) -> Result<(Vec<i64>, i64)> {
    let td = TreeDecomposition::new(rt.tree.clone(), rt.bags())?;
    let report = width(v, &td)?;
    Ok((report.node_widths, report.width))
}

fn treewidth_checks(o: VerifyOptions) -> Result<Vec<CheckResult>> {
    let small = matroids(o.max_elements.min(6), GRAPH_ORDER_LIMIT);
    let medium = matroids(o.max_elements, GRAPH_ORDER_LIMIT);
    let mut out = Vec::new();
    out.push(over("round matroids have tree-width equal to rank", &small, |e, t| {
        let v = e.matroid.view();
        if is_round(&v, v.ground())? {
            let tw = brute_force_treewidth(&v)?;
            t.case(tw == v.full_rank() as i64, || format!("{}: tw = {tw}", label(e)));
        }
        Ok(())
    })?);
    out.push(over("round flats bound tree-width from below", &small, |e, t| {
        let v = e.matroid.view();
        let tw = brute_force_treewidth(&v)?;
        let lb = round_flat_lower_bound(&v)?;
        t.case(lb <= tw, || format!("{}: bound {lb} above tw {tw}", label(e)));
        Ok(())
    })?);
    out.push(over("rotunda trees are optimal tree-decompositions", &medium, |e, t| {
        let v = e.matroid.view();
        if !v.is_connected()? || !is_sss(&v)? {
            return Ok(());
        }
        let value = rotunda_treewidth(&v)?;
        if v.size() <= 6 {
            let tw = brute_force_treewidth(&v)?;
            t.case(tw == value, || format!("{}: tw {tw}, largest rotunda rank {value}", label(e)));
        } else {
            let lb = round_flat_lower_bound(&v)?;
            t.case(lb <= value, || format!("{}: bound {lb} above {value}", label(e)));
        }
        let trees = if rotunda(&v)?.len() <= crate::rotunda_graph::ROTUNDA_TREE_ENUMERATION_BOUND {
            crate::rotunda_graph::rotunda_trees(&v, &Weighting::Rank)?
        } else {
            vec![crate::rotunda_graph::rotunda_tree(&v, &Weighting::Rank)?]
        };
        for rt in trees {
            let (nodes, w) = rotunda_tree_widths(&v, &rt)?;
            let ranks: Vec<i64> = rt.rotunda.iter().map(|r| r.rank as i64).collect();
            t.case(w == value && nodes == ranks, || format!("{}: node widths {nodes:?}, ranks {ranks:?}", label(e)));
        }
        Ok(())
    })?);
    let tiny = matroids(4, 4);
    out.push(over("dropping a duplicated element never raises a node-width", &tiny, |e, t| {
        let v = e.matroid.view();
        let elements: Vec<usize> = v.ground().iter().collect();
        for k in 2..=3usize {
            for tree in unlabeled_trees(k) {
                // each element picks a non-empty set of nodes
                let choices = (1u64 << k) - 1;
                let total = choices.pow(elements.len() as u32);
                for mut code in 0..total {
                    let mut bags = vec![ElementSet::EMPTY; k];
                    for &x in &elements {
                        let nodes = code % choices + 1;
                        code /= choices;
                        for (s, bag) in bags.iter_mut().enumerate() {
                            if nodes >> s & 1 == 1 {
                                bag.insert(x);
                            }
                        }
                    }
                    let td = TreeDecomposition::new(tree.clone(), bags.clone())?;
                    for (s, &bag) in bags.iter().enumerate() {
                        for x in bag {
                            if bags.iter().filter(|b| b.contains(x)).count() < 2 {
                                continue;
                            }
                            let mut pruned = bags.clone();
                            pruned[s].remove(x);
                            let smaller = TreeDecomposition::new(tree.clone(), pruned)?;
                            for u in 0..k {
                                let before = node_width(&v, &td, u)?;
                                let after = node_width(&v, &smaller, u)?;
                                t.case(after <= before, || format!("{}: node {u} grows from {before} to {after}", label(e)));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })?);
    out.push(over("extra tree nodes never lower the width", &tiny, |e, t| {
        let v = e.matroid.view();
        let n = v.size().max(1);
        let base = min_strict_width(&v, 1..=n);
        let wide = min_strict_width(&v, 1..=n + 2);
        t.case(base == wide, || format!("{}: {base} with at most {n} nodes, {wide} with more", label(e)));
        Ok(())
    })?);
    Ok(out)
}

/// Runs every suite in order.
pub fn run_all(graph_order: usize) -> Result<Vec<SuiteReport>> {
    Suite::ALL
        .iter()
        .map(|&s| {
            let mut o = VerifyOptions::for_suite(s);
            o.graph_order = graph_order;
            run_suite(s, o)
        })
        .collect()
}

//! Brute-force oracles written straight from the definitions. They only use
//! the rank function of a matroid and the adjacency of a graph.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rotunda::graph::SimpleGraph;
use rotunda::matroid::{catalog, CatalogEntry, GRAPH_ORDER_LIMIT};
use rotunda::{ElementSet, Matroid};

pub fn bits(s: ElementSet) -> u64 {
    s.bits()
}

pub fn set(b: u64) -> ElementSet {
    ElementSet::from_bits(b)
}

pub fn subsets(ground: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = 0u64;
    loop {
        out.push(s);
        if s == ground {
            break;
        }
        s = (s.wrapping_sub(ground)) & ground;
    }
    out
}

pub fn r(m: &Matroid, x: u64) -> usize {
    m.rank(set(x))
}

/// Matroid on every catalog entry with at most `n` elements.
pub fn entries(n: usize) -> Vec<CatalogEntry> {
    catalog(GRAPH_ORDER_LIMIT).into_iter().filter(|e| e.matroid.size() <= n).collect()
}

pub fn is_flat(m: &Matroid, within: u64, x: u64) -> bool {
    let rx = r(m, x);
    (0..64).filter(|e| within >> e & 1 == 1 && x >> e & 1 == 0).all(|e| r(m, x | 1 << e) > rx)
}

/// Flats of `M|within`, sorted by (rank, bits).
pub fn flats(m: &Matroid, within: u64) -> Vec<(usize, u64)> {
    let mut out: Vec<(usize, u64)> = subsets(within)
        .into_iter()
        .filter(|&x| is_flat(m, within, x))
        .map(|x| (r(m, x), x))
        .collect();
    out.sort();
    out
}

pub fn closure(m: &Matroid, within: u64, x: u64) -> u64 {
    let rx = r(m, x);
    (0..64)
        .filter(|e| within >> e & 1 == 1)
        .filter(|&e| r(m, x | 1 << e) == rx)
        .fold(x, |a, e| a | 1 << e)
}

/// Lattice modularity of `f` in `M|within`.
pub fn is_modular(m: &Matroid, within: u64, f: u64) -> bool {
    flats(m, within)
        .iter()
        .all(|&(rg, g)| r(m, f) + rg == r(m, f | g) + r(m, f & g))
}

pub fn modular_flats(m: &Matroid, within: u64) -> Vec<u64> {
    flats(m, within).into_iter().map(|(_, f)| f).filter(|&f| is_modular(m, within, f)).collect()
}

/// No two proper flats of `M|x` cover `x`.
pub fn is_round(m: &Matroid, x: u64) -> bool {
    let proper: Vec<u64> = flats(m, x).into_iter().map(|(_, f)| f).filter(|&f| f != x).collect();
    !proper.iter().any(|&a| proper.iter().any(|&b| a | b == x))
}

pub fn round_flats(m: &Matroid) -> Vec<u64> {
    let e = bits(m.ground());
    flats(m, e).into_iter().map(|(_, f)| f).filter(|&f| is_round(m, f)).collect()
}

pub fn rotunda(m: &Matroid) -> Vec<u64> {
    let round = round_flats(m);
    round
        .iter()
        .copied()
        .filter(|&f| !round.iter().any(|&g| g != f && f & g == f))
        .collect()
}

pub fn supersolvable(m: &Matroid) -> bool {
    let e = bits(m.ground());
    let modular: Vec<(usize, u64)> = flats(m, e).into_iter().filter(|&(_, f)| is_modular(m, e, f)).collect();
    let full = r(m, e);
    let mut level: BTreeSet<u64> = modular.iter().filter(|&&(k, _)| k == 0).map(|&(_, f)| f).collect();
    for k in 1..=full {
        level = modular
            .iter()
            .filter(|&&(rk, f)| rk == k && level.iter().any(|&g| g & f == g))
            .map(|&(_, f)| f)
            .collect();
    }
    !level.is_empty()
}

pub fn saturated(m: &Matroid) -> bool {
    let e = bits(m.ground());
    round_flats(m).into_iter().all(|f| is_modular(m, e, f))
}

pub fn is_circuit(m: &Matroid, c: u64) -> bool {
    let k = c.count_ones() as usize;
    k > 0 && r(m, c) == k - 1 && (0..64).filter(|e| c >> e & 1 == 1).all(|e| r(m, c & !(1 << e)) == k - 1)
}

pub fn circuits(m: &Matroid) -> Vec<u64> {
    subsets(bits(m.ground())).into_iter().filter(|&c| is_circuit(m, c)).collect()
}

/// Every circuit of size at least four splits at a chord.
pub fn c_chordal(m: &Matroid) -> bool {
    let e = bits(m.ground());
    circuits(m).into_iter().filter(|c| c.count_ones() >= 4).all(|c| {
        (0..64).filter(|z| e >> z & 1 == 1 && c >> z & 1 == 0).any(|z| {
            subsets(c)
                .into_iter()
                .filter(|&a| a != 0 && a != c)
                .any(|a| is_circuit(m, a | 1 << z) && is_circuit(m, (c & !a) | 1 << z))
        })
    })
}

pub fn connected_components(m: &Matroid) -> Vec<u64> {
    let e = bits(m.ground());
    let cs = circuits(m);
    let mut comps: Vec<u64> = Vec::new();
    for x in 0..64 {
        if e >> x & 1 == 0 {
            continue;
        }
        let mut comp = 1u64 << x;
        loop {
            let grown = cs.iter().filter(|&&c| c & comp != 0).fold(comp, |a, &c| a | c);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        if !comps.contains(&comp) {
            comps.push(comp);
        }
    }
    comps
}

/// Rotunda pairs certified by a modular cover, loops ignored in the meet test.
pub fn rotunda_edges(m: &Matroid) -> BTreeSet<(u64, u64)> {
    let e = bits(m.ground());
    let loops = closure(m, e, 0);
    let rot = rotunda(m);
    let modular = modular_flats(m, e);
    let mut out = BTreeSet::new();
    for (i, &a) in rot.iter().enumerate() {
        for &b in &rot[i + 1..] {
            if a & b & !loops == 0 {
                continue;
            }
            let ok = modular.iter().any(|&f1| {
                f1 & a == a
                    && modular
                        .iter()
                        .any(|&f2| f2 & b == b && f1 | f2 == e && f1 & f2 == a & b && f1 != e && f2 != e)
            });
            if ok {
                out.insert((a.min(b), a.max(b)));
            }
        }
    }
    out
}

// Graph oracles.

pub fn adjacent(g: &SimpleGraph, u: usize, v: usize) -> bool {
    g.edges().contains(&(u.min(v), u.max(v)))
}

pub fn is_clique(g: &SimpleGraph, s: u64) -> bool {
    let vs: Vec<usize> = (0..g.order()).filter(|v| s >> v & 1 == 1).collect();
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| adjacent(g, u, v)))
}

pub fn maximal_cliques(g: &SimpleGraph) -> Vec<u64> {
    let all = if g.order() == 0 { 0 } else { u64::MAX >> (64 - g.order()) };
    let cliques: Vec<u64> = subsets(all).into_iter().filter(|&s| s != 0 && is_clique(g, s)).collect();
    let mut out: Vec<u64> = cliques
        .iter()
        .copied()
        .filter(|&c| !cliques.iter().any(|&d| d != c && d & c == c))
        .collect();
    out.sort();
    out
}

fn reach(g: &SimpleGraph, from: u64, allowed: u64) -> u64 {
    let mut seen = from & allowed;
    loop {
        let mut next = seen;
        for (u, v) in g.edges() {
            if seen >> u & 1 == 1 && allowed >> v & 1 == 1 {
                next |= 1 << v;
            }
            if seen >> v & 1 == 1 && allowed >> u & 1 == 1 {
                next |= 1 << u;
            }
        }
        if next == seen {
            return seen;
        }
        seen = next;
    }
}

/// No induced cycle of length four or more.
pub fn chordal(g: &SimpleGraph) -> bool {
    let all = if g.order() == 0 { 0 } else { u64::MAX >> (64 - g.order()) };
    !subsets(all).into_iter().filter(|s| s.count_ones() >= 4).any(|s| {
        let degrees_two = (0..g.order())
            .filter(|v| s >> v & 1 == 1)
            .all(|v| (0..g.order()).filter(|&u| s >> u & 1 == 1 && adjacent(g, u, v)).count() == 2);
        degrees_two && reach(g, 1 << s.trailing_zeros(), s) == s
    })
}

/// Cliques meeting, with every path from one side to the other through the meet.
pub fn separating_pair(g: &SimpleGraph, c1: u64, c2: u64) -> bool {
    let meet = c1 & c2;
    if meet == 0 {
        return false;
    }
    let all = u64::MAX >> (64 - g.order());
    reach(g, c1 & !c2, all & !meet) & (c2 & !c1) == 0
}

pub fn reduced_clique_edges(g: &SimpleGraph) -> BTreeSet<(u64, u64)> {
    let cs = maximal_cliques(g);
    let mut out = BTreeSet::new();
    for (i, &a) in cs.iter().enumerate() {
        for &b in &cs[i + 1..] {
            if separating_pair(g, a, b) {
                out.insert((a.min(b), a.max(b)));
            }
        }
    }
    out
}

/// Connected with no cut-vertex.
pub fn two_connected(g: &SimpleGraph) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    let all = u64::MAX >> (64 - n);
    reach(g, 1, all) == all
        && (0..n).all(|v| {
            let rest = all & !(1 << v);
            rest == 0 || reach(g, 1 << rest.trailing_zeros(), rest) == rest
        })
}

/// Edge ids of `M(G)` spanned by a vertex set.
pub fn clique_edges(g: &SimpleGraph, c: u64) -> u64 {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| c >> u & 1 == 1 && c >> v & 1 == 1)
        .fold(0, |a, (i, _)| a | 1 << i)
}

/// Spanning trees of a small graph as sorted edge-index lists.
pub fn spanning_trees(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let m = edges.len();
    for mask in 0u64..1 << m {
        if mask.count_ones() as usize != k - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut acyclic = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    acyclic = false;
                    break;
                }
                parent[ra] = rb;
            }
        }
        if acyclic {
            out.push((0..m).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Bags containing each element induce connected subgraphs of the tree.
pub fn subtree_property(k: usize, tree: &[(usize, usize)], bags: &[u64]) -> bool {
    let all_elements = bags.iter().fold(0, |a, b| a | b);
    (0..64).filter(|x| all_elements >> x & 1 == 1).all(|x| {
        let nodes: Vec<usize> = (0..k).filter(|&t| bags[t] >> x & 1 == 1).collect();
        let inside = |t: usize| nodes.contains(&t);
        let mut seen = vec![nodes[0]];
        loop {
            let mut grew = false;
            for &(a, b) in tree {
                if inside(a) && inside(b) {
                    if seen.contains(&a) && !seen.contains(&b) {
                        seen.push(b);
                        grew = true;
                    }
                    if seen.contains(&b) && !seen.contains(&a) {
                        seen.push(a);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        seen.len() == nodes.len()
    })
}

/// Maximum-weight spanning trees by exhaustion.
pub fn max_weight_trees(k: usize, edges: &[(usize, usize)], weights: &[u64]) -> Vec<Vec<usize>> {
    let all = spanning_trees(k, edges);
    let best = all.iter().map(|t| t.iter().map(|&i| weights[i]).sum::<u64>()).max();
    all.into_iter()
        .filter(|t| Some(t.iter().map(|&i| weights[i]).sum::<u64>()) == best)
        .collect()
}

/// Node-width straight from the formula, with components found by search.
pub fn node_width(m: &Matroid, tree: &[(usize, usize)], bags: &[u64], t: usize) -> i64 {
    let mut parts = Vec::new();
    for &(a, b) in tree {
        let start = if a == t {
            b
        } else if b == t {
            a
        } else {
            continue;
        };
        let mut side = vec![start];
        loop {
            let mut grew = false;
            for &(x, y) in tree {
                for (p, q) in [(x, y), (y, x)] {
                    if side.contains(&p) && q != t && !side.contains(&q) {
                        side.push(q);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        parts.push(side.iter().fold(0u64, |acc, &s| acc | bags[s]));
    }
    let e = bits(m.ground());
    let d = parts.len() as i64;
    let sum: i64 = (0..parts.len())
        .map(|i| {
            let others = parts.iter().enumerate().filter(|&(j, _)| j != i).fold(bags[t], |a, (_, &p)| a | p);
            r(m, others) as i64
        })
        .sum();
    sum - (d - 1) * r(m, e) as i64
}

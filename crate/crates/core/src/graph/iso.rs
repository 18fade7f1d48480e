//! Graph isomorphism for small graphs: joint colour refinement followed by
//! backtracking over colour-compatible assignments.

use std::collections::BTreeMap;

use super::{SimpleGraph, VertexSet};

/// Stable colours for the vertices of several graphs at once, so that colours
/// are comparable across graphs.
fn refine(graphs: &[&SimpleGraph]) -> Vec<Vec<u32>> {
    let mut colors: Vec<Vec<u32>> = graphs
        .iter()
        .map(|g| (0..g.order()).map(|v| g.degree(v) as u32).collect())
        .collect();
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<Vec<(u32, Vec<u32>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                (0..g.order())
                    .map(|v| {
                        let mut around: Vec<u32> = g.neighbors(v).iter().map(|u| c[u]).collect();
                        around.sort_unstable();
                        (c[v], around)
                    })
                    .collect()
            })
            .collect();
        let mut table: BTreeMap<&(u32, Vec<u32>), u32> = sigs.iter().flatten().map(|s| (s, 0)).collect();
        for (i, slot) in table.values_mut().enumerate() {
            *slot = i as u32;
        }
        let next: Vec<Vec<u32>> = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| table[s]).collect())
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// A vertex map `g -> h` that is an isomorphism, if one exists.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let colors = refine(&[g, h]);
    let (cg, ch) = (&colors[0], &colors[1]);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    // assign rarest colour classes first
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (hist_g.iter().filter(|&&c| c == cg[v]).count(), v));
    let mut map = vec![usize::MAX; g.order()];
    let mut used = VertexSet::EMPTY;
    extend(g, h, cg, ch, &order, 0, &mut map, &mut used).then_some(map)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &SimpleGraph,
    h: &SimpleGraph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.order() {
        if used.contains(w) || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Tries every permutation. Only meant as a test oracle for small graphs.
pub fn are_isomorphic_brute_force(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let n = g.order();
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.edge_count() == h.edge_count() && edges.iter().all(|&(u, v)| h.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Canonical adjacency code: two graphs are isomorphic iff their codes are
/// equal. Exponential in the size of the largest colour class; intended for
/// graphs of at most a dozen vertices.
pub fn canonical_form(g: &SimpleGraph) -> (usize, Vec<u64>) {
    let n = g.order();
    let colors = refine(&[g]).pop().expect("one graph in, one colouring out");
    // cells in colour order, canonical positions are assigned cell by cell
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colors[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best: Option<Vec<u64>> = None;
    let mut perms: Vec<Vec<usize>> = cells.clone();
    loop {
        let order: Vec<usize> = perms.iter().flatten().copied().collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let code: Vec<u64> = order
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        if best.as_ref().map_or(true, |b| code < *b) {
            best = Some(code);
        }
        // odometer over the per-cell permutations
        let mut k = perms.len();
        loop {
            if k == 0 {
                return (n, best.unwrap_or_default());
            }
            k -= 1;
            if next_permutation(&mut perms[k]) {
                break;
            }
            perms[k].sort_unstable();
        }
    }
}

//! Exact graph invariants: stable sets, maximal cliques, clique and
//! chromatic numbers, clique covers and chordality.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The five numbers tracked per graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    /// Stability number.
    pub alpha: usize,
    /// Number of maximal cliques.
    pub m: usize,
    /// Clique number.
    pub omega: usize,
    /// Clique covering number.
    pub theta: usize,
    /// Chromatic number.
    pub chi: usize,
}

impl InvariantBundle {
    pub fn of(g: &Graph) -> Self {
        InvariantBundle {
            alpha: stability_number(g),
            m: maximal_cliques(g).len(),
            omega: clique_number(g),
            theta: clique_cover_number(g),
            chi: chromatic_number(g),
        }
    }
}

/// All stable sets including the empty one, in lexicographic order of
/// their sorted vertex lists.
pub fn stable_sets(g: &Graph) -> Vec<VertexSet> {
    fn extend(g: &Graph, current: VertexSet, allowed: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current);
        for v in allowed {
            let rest = allowed.difference(g.neighbors(v)).difference(VertexSet::full(v + 1));
            extend(g, current.with(v), rest, out);
        }
    }
    let mut out = Vec::new();
    extend(g, VertexSet::EMPTY, g.vertices(), &mut out);
    out
}

pub fn stability_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Inclusion-maximal cliques (Bron–Kerbosch with pivoting), sorted
/// lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn bron_kerbosch(
        g: &Graph,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(g.neighbors(u)).len())
            .expect("p is nonempty");
        for v in p.difference(g.neighbors(pivot)) {
            let nv = g.neighbors(v);
            bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, candidates: VertexSet, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut candidates = candidates;
        while let Some(v) = candidates.first() {
            if size + candidates.len() <= *best {
                return;
            }
            candidates.remove(v);
            grow(g, size + 1, candidates.intersection(g.neighbors(v)), best);
        }
    }
    let mut best = 0;
    grow(g, 0, g.vertices(), &mut best);
    best
}

/// Exact chromatic number: DSATUR-ordered branch and bound, seeded with
/// the clique number as lower bound.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    let lower = clique_number(g);
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut best = n;
    dsatur(g, &mut colors, 0, 0, lower, &mut best);
    best
}

fn dsatur(
    g: &Graph,
    colors: &mut [Option<usize>],
    colored: usize,
    used: usize,
    lower: usize,
    best: &mut usize,
) {
    if used >= *best || *best == lower {
        return;
    }
    if colored == colors.len() {
        *best = used;
        return;
    }
    let saturation = |v: usize| {
        g.neighbors(v)
            .iter()
            .filter_map(|u| colors[u])
            .fold(0u64, |acc, c| acc | 1 << c)
    };
    let v = (0..colors.len())
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| (saturation(v).count_ones(), g.degree(v), std::cmp::Reverse(v)))
        .expect("an uncolored vertex remains");
    let forbidden = saturation(v);
    for c in 0..=used.min(*best - 1) {
        if forbidden & (1 << c) != 0 {
            continue;
        }
        let next_used = used.max(c + 1);
        if next_used >= *best {
            continue;
        }
        colors[v] = Some(c);
        dsatur(g, colors, colored + 1, next_used, lower, best);
        colors[v] = None;
        if *best == lower {
            return;
        }
    }
}

/// Least number of cliques partitioning the vertex set.
pub fn clique_cover_number(g: &Graph) -> usize {
    chromatic_number(&g.complement())
}

/// Chordality via maximum cardinality search followed by a perfect
/// elimination ordering check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut position = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited.insert(v);
        position[v] = step;
        order.push(v);
        for u in g.neighbors(v).difference(visited) {
            weight[u] += 1;
        }
    }
    let mut earlier = VertexSet::EMPTY;
    for &v in &order {
        let back = g.neighbors(v).intersection(earlier);
        if let Some(parent) = back.iter().max_by_key(|&u| position[u]) {
            if !back.without(parent).is_subset(g.neighbors(parent)) {
                return false;
            }
        }
        earlier.insert(v);
    }
    true
}

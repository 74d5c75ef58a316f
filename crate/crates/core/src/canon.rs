//! Canonical forms and isomorphism-free enumeration of small graphs.
//!
//! The canonical key is the lexicographically least upper-triangle bit
//! string (graph6 column order) over all vertex orders that list vertices
//! by non-increasing invariant `(degree, sorted neighbour degrees)`.
//! Both the invariant and the minimum are relabeling-independent, so two
//! graphs share a key exactly when they are isomorphic.

use std::collections::BTreeMap;

use crate::error::{ensure_at_most, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_MAX_VERTICES: usize = 10;

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const ENUMERATION_MAX_VERTICES: usize = 7;

/// Total-order key; equal keys iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

/// Canonical key plus a vertex order attaining it: `order[k]` is the
/// vertex placed at canonical position `k`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    ensure_at_most("canonical form vertex count", n, CANONICAL_MAX_VERTICES)?;

    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut distinct = invariant.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let class_id: Vec<usize> = invariant
        .iter()
        .map(|inv| distinct.iter().position(|d| d == inv).unwrap())
        .collect();
    // Class required at each canonical position: non-decreasing class ids.
    let mut slot_class = class_id.clone();
    slot_class.sort_unstable();

    let total_bits = n * (n - 1) / 2;
    let mut search = Search {
        g,
        n,
        total_bits,
        slot_class,
        class_id,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.descend(VertexSet::EMPTY, 0, 0);
    let (key, order) = search.best.expect("at least one vertex order exists");
    let mut bytes = vec![n as u8];
    bytes.extend_from_slice(&key.to_be_bytes()[2..]);
    Ok((CanonicalForm(bytes), order))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: usize,
    slot_class: Vec<usize>,
    class_id: Vec<usize>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    /// `prefix` holds the first `len` bits of the key, most significant first.
    fn descend(&mut self, used: VertexSet, prefix: u64, len: usize) {
        let k = self.order.len();
        if let Some((best, _)) = &self.best {
            let best_prefix = best >> (self.total_bits - len);
            if prefix > best_prefix {
                return;
            }
        }
        if k == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for v in 0..self.n {
            if used.contains(v) || self.class_id[v] != self.slot_class[k] {
                continue;
            }
            let mut next = prefix;
            for &u in &self.order {
                next = (next << 1) | u64::from(self.g.has_edge(u, v));
            }
            self.order.push(v);
            self.descend(used.with(v), next, len + k);
            self.order.pop();
        }
    }
}

/// The graph relabeled into canonical position order.
pub fn canonical_graph(g: &Graph) -> Result<(CanonicalForm, Graph)> {
    let (form, order) = canonical_labeling(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((form, g.relabel(&perm)?))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(a)? == canonical_form(b)?)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical key. Representatives are in canonical labeling.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    ensure_at_most("enumeration vertex count", n, ENUMERATION_MAX_VERTICES)?;
    let k1 = Graph::empty(n)?.induced_subgraph(VertexSet::singleton(0))?;
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    level.insert(canonical_form(&k1)?, k1);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for base in level.values() {
            for nbrs in VertexSet::full(size - 1).subsets() {
                let mut rows: Vec<VertexSet> =
                    (0..size - 1).map(|v| base.neighbors(v)).collect();
                for v in nbrs {
                    rows[v].insert(size - 1);
                }
                rows.push(nbrs);
                let (form, g) = canonical_graph(&Graph::from_rows(rows))?;
                next.entry(form).or_insert(g);
            }
        }
        level = next;
    }
    Ok(level
        .into_values()
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}

//! Finite posets on `0..n`: ideals, antichains, comparability graphs,
//! forbidden-pattern matching and isomorphism-free enumeration.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_at_most, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Largest element count accepted by [`enumerate_posets`].
pub const POSET_ENUMERATION_MAX: usize = 6;

/// A strict partial order. `up[i]` holds every `j` with `i < j`;
/// `down[j]` is its transpose. The relation is transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    up: Vec<VertexSet>,
    down: Vec<VertexSet>,
}

/// Poset interchange form: `{"n": 4, "relations": [[0,2],[1,2]]}`, each
/// pair meaning `i < j`. The transitive closure is taken on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub relations: Vec<[usize; 2]>,
}

impl Poset {
    /// Builds the transitive closure of `relations` (pairs `i < j`).
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        ensure_at_most("poset element count", n, MAX_VERTICES)?;
        let mut up = vec![VertexSet::EMPTY; n];
        for &(a, b) in relations {
            for e in [a, b] {
                if e >= n {
                    return Err(Error::InvalidElement { element: e, n });
                }
            }
            up[a].insert(b);
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| up[i].contains(i)) {
            return Err(Error::NotAntisymmetric(i));
        }
        Ok(Poset::from_closed(up))
    }

    /// `up` must already be irreflexive, antisymmetric and transitive.
    pub(crate) fn from_closed(up: Vec<VertexSet>) -> Self {
        let n = up.len();
        let mut down = vec![VertexSet::EMPTY; n];
        for (i, row) in up.iter().enumerate() {
            for j in *row {
                down[j].insert(i);
            }
        }
        Poset { n, up, down }
    }

    pub fn chain(n: usize) -> Result<Self> {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(n, &rel)
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Poset::new(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// Elements strictly above `a`.
    pub fn above(&self, a: usize) -> VertexSet {
        self.up[a]
    }

    /// Elements strictly below `a`.
    pub fn below(&self, a: usize) -> VertexSet {
        self.down[a]
    }

    /// Every pair `(i, j)` with `i < j`, row-major.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| self.up[i].iter().map(move |j| (i, j)))
            .collect()
    }

    /// `a < b` with nothing strictly between.
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.less(a, b) && self.up[a].intersection(self.down[b]).is_empty()
    }

    /// Cover pairs `(i, j)`, row-major.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| self.is_cover(i, j))
            .collect()
    }

    pub fn is_chain(&self, set: VertexSet) -> bool {
        set.iter().all(|a| set.without(a).is_subset(self.up[a].union(self.down[a])))
    }

    pub fn is_antichain(&self, set: VertexSet) -> bool {
        set.iter().all(|a| self.up[a].intersection(set).is_empty())
    }

    pub fn is_ideal(&self, set: VertexSet) -> bool {
        set.iter().all(|a| self.down[a].is_subset(set))
    }

    pub fn minimal_elements(&self, set: VertexSet) -> VertexSet {
        set.iter().filter(|&a| self.down[a].intersection(set).is_empty()).collect()
    }

    pub fn maximal_elements(&self, set: VertexSet) -> VertexSet {
        set.iter().filter(|&a| self.up[a].intersection(set).is_empty()).collect()
    }

    /// The down-closure of `set`.
    pub fn down_closure(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(set, |acc, a| acc.union(self.down[a]))
    }

    /// All down-closed subsets, including the empty set and the whole
    /// poset, in lexicographic order of their sorted element lists.
    pub fn ideals(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .antichains()
            .into_iter()
            .map(|a| self.down_closure(a))
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// All pairwise-incomparable subsets including the empty set, in
    /// lexicographic order.
    pub fn antichains(&self) -> Vec<VertexSet> {
        fn extend(p: &Poset, current: VertexSet, allowed: VertexSet, out: &mut Vec<VertexSet>) {
            out.push(current);
            for a in allowed {
                let rest = allowed
                    .difference(p.up[a])
                    .difference(p.down[a])
                    .difference(VertexSet::full(a + 1));
                extend(p, current.with(a), rest, out);
            }
        }
        let mut out = Vec::new();
        extend(self, VertexSet::EMPTY, self.elements(), &mut out);
        out
    }

    /// Edge iff comparable.
    pub fn comparability_graph(&self) -> Graph {
        let rows = (0..self.n).map(|a| self.up[a].union(self.down[a])).collect();
        Graph::from_rows(rows)
    }

    /// The order dual (every relation reversed).
    pub fn dual(&self) -> Poset {
        Poset::from_closed(self.down.clone())
    }

    /// Old element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
            seen.insert(p);
        }
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!("permutation length {} != {}", perm.len(), self.n)));
        }
        let mut up = vec![VertexSet::EMPTY; self.n];
        for a in 0..self.n {
            up[perm[a]] = self.up[a].iter().map(|b| perm[b]).collect();
        }
        Ok(Poset::from_closed(up))
    }

    /// The subposet induced on `set`, relabeled by increasing label.
    pub fn restrict(&self, set: VertexSet) -> Result<Poset> {
        if set.is_empty() {
            return Err(Error::EmptySubset);
        }
        let keep = set.to_vec();
        let up = keep
            .iter()
            .map(|&a| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.less(a, b))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        Ok(Poset::from_closed(up))
    }

    /// A witness tuple (in the pattern's point order) of distinct elements
    /// realizing every required strict relation (as a cover relation where
    /// the pattern demands one) and every required incomparability of
    /// `kind`. Pairs the pattern leaves unconstrained may stand in any
    /// relation. The lexicographically least tuple is returned.
    pub fn contains_pattern(&self, kind: PatternKind) -> Option<Vec<usize>> {
        let points = kind.point_count();
        let mut tuple = Vec::with_capacity(points);
        self.match_pattern(kind, &mut tuple).then_some(tuple)
    }

    fn match_pattern(&self, kind: PatternKind, tuple: &mut Vec<usize>) -> bool {
        let k = tuple.len();
        if k == kind.point_count() {
            return true;
        }
        for cand in 0..self.n {
            if tuple.contains(&cand) {
                continue;
            }
            let holds = |lo: usize, hi: usize, a: usize, b: usize| {
                if kind.required_covers().contains(&(a, b)) {
                    self.is_cover(lo, hi)
                } else {
                    self.less(lo, hi)
                }
            };
            let fits_less = kind.required_less().iter().all(|&(a, b)| {
                match (a == k, b == k) {
                    (true, false) if b < k => holds(cand, tuple[b], a, b),
                    (false, true) if a < k => holds(tuple[a], cand, a, b),
                    _ => true,
                }
            });
            let fits_incomparable = kind.required_incomparable().iter().all(|&(a, b)| {
                let other = match (a == k, b == k) {
                    (true, false) if b < k => tuple[b],
                    (false, true) if a < k => tuple[a],
                    _ => return true,
                };
                !self.comparable(cand, other)
            });
            if fits_less && fits_incomparable {
                tuple.push(cand);
                if self.match_pattern(kind, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }

    /// Rooted-forest test straight from the definition: every connected
    /// component of the comparability graph has a unique minimal element,
    /// and the strict down-set of every element is a chain.
    pub fn is_tree_by_definition(&self) -> bool {
        let g = self.comparability_graph();
        let mut remaining = self.elements();
        while let Some(start) = remaining.first() {
            let component = g.component_of(start);
            if self.minimal_elements(component).len() != 1 {
                return false;
            }
            remaining = remaining.difference(component);
        }
        (0..self.n).all(|a| self.is_chain(self.down[a]))
    }

    /// Free of the X, N and diamond patterns.
    pub fn is_tree_by_forbidden(&self) -> bool {
        PatternKind::ALL
            .iter()
            .all(|&kind| self.contains_pattern(kind).is_none())
    }

    pub fn to_json_form(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            relations: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json_form(form: &PosetJson) -> Result<Poset> {
        let rel: Vec<_> = form.relations.iter().map(|r| (r[0], r[1])).collect();
        Poset::new(form.n, &rel)
    }

    pub fn from_json(text: &str) -> Result<Poset> {
        let form: PosetJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Poset::from_json_form(&form)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_form()).expect("poset serializes")
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers())
    }
}

/// Forbidden order patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    /// Points `(b, e, c, d, f)`: `b, e < c < d, f` with `b ∥ e`, `d ∥ f`.
    X,
    /// Points `(z1, z2, z3, z4)`: `z1 ⋖ z2 > z3 ⋖ z4` with `z1 ∥ z3`,
    /// `z2 ∥ z4`. The outer strokes are cover relations, the middle one
    /// any strict relation; the pair `(z1, z4)` is unconstrained.
    N,
    /// Points `(p, q, r, s)`: `p < q, r < s` with `q ∥ r`.
    Diamond,
}

impl PatternKind {
    pub const ALL: [PatternKind; 3] = [PatternKind::X, PatternKind::N, PatternKind::Diamond];

    pub fn point_count(self) -> usize {
        match self {
            PatternKind::X => 5,
            PatternKind::N | PatternKind::Diamond => 4,
        }
    }

    /// Required strict relations `(a, b)` meaning point `a` < point `b`.
    pub fn required_less(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::X => &[(0, 2), (1, 2), (2, 3), (2, 4)],
            PatternKind::N => &[(0, 1), (2, 1), (2, 3)],
            PatternKind::Diamond => &[(0, 1), (0, 2), (1, 3), (2, 3)],
        }
    }

    /// The subset of [`required_less`](Self::required_less) that must be
    /// realized by cover relations.
    pub fn required_covers(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::N => &[(0, 1), (2, 3)],
            PatternKind::X | PatternKind::Diamond => &[],
        }
    }

    pub fn required_incomparable(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::X => &[(0, 1), (3, 4)],
            PatternKind::N => &[(0, 2), (1, 3)],
            PatternKind::Diamond => &[(1, 2)],
        }
    }

    /// The pattern realized as a poset on its own points.
    pub fn as_poset(self) -> Poset {
        Poset::new(self.point_count(), self.required_less()).expect("patterns are acyclic")
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::X => "X",
            PatternKind::N => "N",
            PatternKind::Diamond => "diamond",
        })
    }
}

/// Canonical key of a poset: least relation bit string over vertex orders
/// sorted by `(|down|, |up|)`.
pub fn poset_canonical_key(p: &Poset) -> Result<Vec<u8>> {
    let n = p.n();
    ensure_at_most("poset canonical form element count", n, 10)?;
    let class: Vec<(usize, usize)> = (0..n).map(|a| (p.below(a).len(), p.above(a).len())).collect();
    let mut slots = class.clone();
    slots.sort_unstable();
    let mut best: Option<u128> = None;
    let mut order = Vec::with_capacity(n);
    poset_search(p, &class, &slots, &mut order, VertexSet::EMPTY, 0, &mut best);
    let mut key = vec![n as u8];
    key.extend_from_slice(&best.expect("some order exists").to_be_bytes());
    Ok(key)
}

fn poset_search(
    p: &Poset,
    class: &[(usize, usize)],
    slots: &[(usize, usize)],
    order: &mut Vec<usize>,
    used: VertexSet,
    prefix: u128,
    best: &mut Option<u128>,
) {
    let n = p.n();
    let k = order.len();
    let len = k * k.saturating_sub(1);
    let total = n * (n - 1);
    if let Some(b) = *best {
        if prefix > b >> (total - len) {
            return;
        }
    }
    if k == n {
        if best.is_none_or(|b| prefix < b) {
            *best = Some(prefix);
        }
        return;
    }
    for v in 0..n {
        if used.contains(v) || class[v] != slots[k] {
            continue;
        }
        let mut next = prefix;
        for &u in order.iter() {
            next = (next << 2) | (u128::from(p.less(u, v)) << 1) | u128::from(p.less(v, u));
        }
        order.push(v);
        poset_search(p, class, slots, order, used.with(v), next, best);
        order.pop();
    }
}

/// One representative per isomorphism class of posets on `n` elements,
/// ordered by canonical key. Built by adding a new maximal element above
/// every ideal of each smaller representative.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    ensure_at_most("poset enumeration element count", n, POSET_ENUMERATION_MAX)?;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let mut level: BTreeMap<Vec<u8>, Poset> = BTreeMap::new();
    let one = Poset::antichain(1)?;
    level.insert(poset_canonical_key(&one)?, one);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for base in level.values() {
            for ideal in base.ideals() {
                let mut up: Vec<VertexSet> = (0..size - 1).map(|a| base.above(a)).collect();
                for a in ideal {
                    up[a].insert(size - 1);
                }
                up.push(VertexSet::EMPTY);
                let p = Poset::from_closed(up);
                next.entry(poset_canonical_key(&p)?).or_insert(p);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

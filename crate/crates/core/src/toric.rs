//! Lattice points and degree-graded affine semigroups generated by
//! homogenized 0/1 vectors: the stable-set ring of a graph and the Hibi
//! ring of a poset, their Hilbert functions and binomial relations.
//!
//! Coefficients never appear: every ring-level statement used here is a
//! statement about the semigroup, so all arithmetic is on exponent
//! vectors.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{ensure_at_most, Error, Result};
use crate::graph::Graph;
use crate::invariants::stable_sets;
use crate::poset::{PatternKind, Poset};
use crate::vertex_set::VertexSet;

/// Hard ceiling on degrees accepted by the public degree-bounded queries.
pub const MAX_DEGREE: usize = 6;
/// Degree bound used when none is configured.
pub const DEFAULT_DEGREE_BOUND: usize = 4;
/// Largest ambient dimension (before homogenization).
pub const MAX_DIMENSION: usize = 15;

const COORDS: usize = 16;
const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// An exponent vector with up to 16 coordinates, one byte each, packed so
/// that integer order is coordinate-lexicographic order. Coordinate 0 is
/// the degree. Coordinates stay below 128.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeVector(u128);

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector(0);

    pub fn from_coords(coords: &[u8]) -> Self {
        assert!(coords.len() <= COORDS, "at most {COORDS} coordinates");
        let mut bits = 0u128;
        for (k, &c) in coords.iter().enumerate() {
            assert!(c < 128, "coordinate {c} too large");
            bits |= u128::from(c) << (8 * (COORDS - 1 - k));
        }
        LatticeVector(bits)
    }

    /// `(1, indicator of support)` in dimension `dim`.
    pub fn homogenized(support: VertexSet, dim: usize) -> Self {
        let mut coords = vec![0u8; dim + 1];
        coords[0] = 1;
        for v in support {
            coords[v + 1] = 1;
        }
        LatticeVector::from_coords(&coords)
    }

    pub fn coord(self, k: usize) -> u8 {
        (self.0 >> (8 * (COORDS - 1 - k))) as u8
    }

    pub fn degree(self) -> usize {
        self.coord(0) as usize
    }

    pub fn coords(self, len: usize) -> Vec<u8> {
        (0..len).map(|k| self.coord(k)).collect()
    }

    /// `self - other` when every coordinate stays nonnegative.
    pub fn checked_sub(self, other: Self) -> Option<Self> {
        if ((self.0 | HIGH_BITS) - other.0) & HIGH_BITS == HIGH_BITS {
            Some(LatticeVector(self.0 - other.0))
        } else {
            None
        }
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: Self) -> Self {
        LatticeVector(self.0 + rhs.0)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut len = COORDS;
        while len > 1 && self.coord(len - 1) == 0 {
            len -= 1;
        }
        write!(f, "{:?}", self.coords(len))
    }
}

/// A finite set of 0/1 vectors of length `dim`, each stored as its
/// support, sorted in lexicographic vector order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePointSet {
    dim: usize,
    points: Vec<VertexSet>,
}

impl LatticePointSet {
    pub fn new(dim: usize, supports: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut points: Vec<VertexSet> = supports.into_iter().collect();
        points.sort_by_key(|&s| reverse_key(s, dim));
        points.dedup();
        LatticePointSet { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn supports(&self) -> &[VertexSet] {
        &self.points
    }

    pub fn contains(&self, support: VertexSet) -> bool {
        self.points.contains(&support)
    }

    pub fn vectors(&self) -> Vec<Vec<u8>> {
        self.points
            .iter()
            .map(|s| (0..self.dim).map(|i| u8::from(s.contains(i))).collect())
            .collect()
    }
}

/// Integer whose order is the lexicographic order of the 0/1 vector.
fn reverse_key(s: VertexSet, dim: usize) -> u32 {
    s.iter().fold(0, |acc, i| acc | 1 << (dim - 1 - i))
}

/// `{ρ(S) : S stable}`.
pub fn stable_polytope_vertices(g: &Graph) -> LatticePointSet {
    LatticePointSet::new(g.n(), stable_sets(g))
}

/// Indicator vectors of the poset ideals.
pub fn order_polytope_vertices(p: &Poset) -> LatticePointSet {
    LatticePointSet::new(p.n(), p.ideals())
}

/// Indicator vectors of the antichains.
pub fn chain_polytope_vertices(p: &Poset) -> LatticePointSet {
    LatticePointSet::new(p.n(), p.antichains())
}

/// The semigroup generated by homogenized 0/1 vectors, graded by the first
/// coordinate. Generator `k` is `(1, ρ(supports[k]))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupRing {
    dim: usize,
    supports: Vec<VertexSet>,
    generators: Vec<LatticeVector>,
}

/// One row of the generator table report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub index: usize,
    pub vector: Vec<u8>,
    pub subset: VertexSet,
}

pub fn semigroup_of(points: &LatticePointSet) -> Result<SemigroupRing> {
    if points.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    ensure_at_most("semigroup dimension", points.dim(), MAX_DIMENSION)?;
    let generators = points
        .supports()
        .iter()
        .map(|&s| LatticeVector::homogenized(s, points.dim()))
        .collect();
    Ok(SemigroupRing {
        dim: points.dim(),
        supports: points.supports().to_vec(),
        generators,
    })
}

/// The toric ring of the stable set polytope of `g`.
pub fn stable_set_ring(g: &Graph) -> Result<SemigroupRing> {
    semigroup_of(&stable_polytope_vertices(g))
}

/// The Hibi ring of `p`.
pub fn hibi_ring(p: &Poset) -> Result<SemigroupRing> {
    semigroup_of(&order_polytope_vertices(p))
}

impl SemigroupRing {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn generator(&self, k: usize) -> LatticeVector {
        self.generators[k]
    }

    /// The subset whose indicator defines generator `k`.
    pub fn support(&self, k: usize) -> VertexSet {
        self.supports[k]
    }

    pub fn index_of_support(&self, s: VertexSet) -> Option<usize> {
        self.supports.iter().position(|&t| t == s)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.generators.len() {
            Ok(())
        } else {
            Err(Error::InvalidGenerator {
                index,
                count: self.generators.len(),
            })
        }
    }

    /// Coordinates including the degree coordinate.
    pub fn coords(&self, v: LatticeVector) -> Vec<u8> {
        v.coords(self.dim + 1)
    }

    pub fn generator_table(&self) -> Vec<GeneratorEntry> {
        (0..self.generators.len())
            .map(|k| GeneratorEntry {
                index: k,
                vector: self.coords(self.generators[k]),
                subset: self.supports[k],
            })
            .collect()
    }

    /// Sum of the generators named by `indices`.
    pub fn sum(&self, indices: &[usize]) -> LatticeVector {
        indices
            .iter()
            .fold(LatticeVector::ZERO, |acc, &k| acc + self.generators[k])
    }
}

/// Every semigroup element of degree `0..=top`, one hash set per degree.
#[derive(Debug, Clone)]
pub struct DegreeTable {
    levels: Vec<HashSet<LatticeVector>>,
}

impl DegreeTable {
    /// Unchecked builder; callers enforce their own degree bound.
    pub(crate) fn build(ring: &SemigroupRing, top: usize) -> Self {
        let mut levels = vec![HashSet::from([LatticeVector::ZERO])];
        for d in 1..=top {
            let prev = &levels[d - 1];
            let mut next = HashSet::with_capacity(prev.len() * 2);
            for &v in prev {
                for &g in &ring.generators {
                    next.insert(v + g);
                }
            }
            levels.push(next);
        }
        DegreeTable { levels }
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, d: usize) -> &HashSet<LatticeVector> {
        &self.levels[d]
    }

    /// Membership of `v` in degree `d`.
    pub fn contains(&self, d: usize, v: LatticeVector) -> bool {
        self.levels.get(d).is_some_and(|l| l.contains(&v))
    }

    pub fn sorted_level(&self, d: usize) -> Vec<LatticeVector> {
        let mut out: Vec<_> = self.levels[d].iter().copied().collect();
        out.sort_unstable();
        out
    }
}

fn check_degree(d: usize) -> Result<()> {
    ensure_at_most("degree", d, MAX_DEGREE)
}

/// All distinct sums of `d` generators, sorted.
pub fn elements_of_degree(ring: &SemigroupRing, d: usize) -> Result<Vec<LatticeVector>> {
    check_degree(d)?;
    Ok(DegreeTable::build(ring, d).sorted_level(d))
}

pub fn hilbert_function(ring: &SemigroupRing, d: usize) -> Result<usize> {
    check_degree(d)?;
    Ok(DegreeTable::build(ring, d).level(d).len())
}

/// `H(0..=top)`.
pub fn hilbert_series_prefix(ring: &SemigroupRing, top: usize) -> Result<Vec<usize>> {
    check_degree(top)?;
    let table = DegreeTable::build(ring, top);
    Ok((0..=top).map(|d| table.level(d).len()).collect())
}

/// A pure-difference binomial `Π left − Π right` on generator indices.
/// `left` and `right` are sorted multisets of equal size with equal
/// generator sums. `essential` marks relations not implied by lower-degree
/// ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BinomialRelation {
    pub degree: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub essential: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl BinomialRelation {
    /// Both sides as an unordered pair, smaller side first.
    pub fn unordered(&self) -> (Vec<usize>, Vec<usize>) {
        if self.left <= self.right {
            (self.left.clone(), self.right.clone())
        } else {
            (self.right.clone(), self.left.clone())
        }
    }

    pub fn holds_in(&self, ring: &SemigroupRing) -> bool {
        self.left.len() == self.degree
            && self.right.len() == self.degree
            && self.left != self.right
            && ring.sum(&self.left) == ring.sum(&self.right)
    }
}

/// One degree-2 relation `{I, J} ~ {I ∩ J, I ∪ J}` per unordered pair of
/// incomparable ideals, with indices into [`hibi_ring`]'s generators.
pub fn hibi_relations(p: &Poset) -> Result<Vec<BinomialRelation>> {
    let ring = hibi_ring(p)?;
    let ideals = p.ideals();
    let index = |s: VertexSet| ring.index_of_support(s).expect("ideals are closed under ∩ and ∪");
    let mut out = Vec::new();
    for (a, &i) in ideals.iter().enumerate() {
        for &j in &ideals[a + 1..] {
            if i.is_subset(j) || j.is_subset(i) {
                continue;
            }
            let mut left = vec![index(i), index(j)];
            let mut right = vec![index(i.intersection(j)), index(i.union(j))];
            left.sort_unstable();
            right.sort_unstable();
            out.push(BinomialRelation {
                degree: 2,
                left,
                right,
                essential: true,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Non-decreasing index sequences of length `d` over `0..count`.
pub(crate) fn multisets(count: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(count: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for k in start..count {
            cur.push(k);
            rec(count, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(count, d, 0, &mut Vec::with_capacity(d), &mut out);
    out
}

/// Degree-`d` multisets grouped by generator sum.
pub(crate) fn fibers(ring: &SemigroupRing, d: usize) -> BTreeMap<LatticeVector, Vec<Vec<usize>>> {
    let mut map: BTreeMap<LatticeVector, Vec<Vec<usize>>> = BTreeMap::new();
    for m in multisets(ring.generator_count(), d) {
        map.entry(ring.sum(&m)).or_default().push(m);
    }
    map
}

/// For each degree `2..=max_degree`, every unordered pair of distinct
/// generator multisets with equal sums. A pair is `essential` when its two
/// sides cannot be linked by a chain of multisets in the same fiber where
/// consecutive members share a generator, i.e. by rewriting a proper
/// sub-multiset with a lower-degree relation.
pub fn toric_relations_up_to(
    ring: &SemigroupRing,
    max_degree: usize,
) -> Result<Vec<BinomialRelation>> {
    if max_degree < 2 {
        return Err(Error::InvalidArgument(format!(
            "relation degree bound must be at least 2, got {max_degree}"
        )));
    }
    check_degree(max_degree)?;
    let mut out = Vec::new();
    for d in 2..=max_degree {
        for fiber in fibers(ring, d).into_values() {
            if fiber.len() < 2 {
                continue;
            }
            let component = share_components(&fiber);
            for a in 0..fiber.len() {
                for b in a + 1..fiber.len() {
                    out.push(BinomialRelation {
                        degree: d,
                        left: fiber[a].clone(),
                        right: fiber[b].clone(),
                        essential: component[a] != component[b],
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Connected components of "shares at least one generator" on a fiber.
fn share_components(fiber: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..fiber.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for a in 0..fiber.len() {
        for b in a + 1..fiber.len() {
            if fiber[a].iter().any(|g| fiber[b].contains(g)) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    (0..fiber.len()).map(|a| find(&mut parent, a)).collect()
}

/// Stanley's transfer map on vertices: ideal `I` of `p` goes to its
/// antichain of maximal elements. Entry `k` is the stable-set-ring
/// generator matched with Hibi generator `k`.
pub fn transfer_map(p: &Poset) -> Result<Vec<usize>> {
    let hibi = hibi_ring(p)?;
    let stable = stable_set_ring(&p.comparability_graph())?;
    Ok((0..hibi.generator_count())
        .map(|k| {
            let max = p.maximal_elements(hibi.support(k));
            stable.index_of_support(max).expect("maximal elements form an antichain")
        })
        .collect())
}

/// Whether the generator bijection `map` (generator `k` of `a` to
/// generator `map[k]` of `b`) carries the fibers of every degree
/// `1..=max_degree` of `a` exactly onto those of `b`.
pub fn relations_preserved(
    a: &SemigroupRing,
    b: &SemigroupRing,
    map: &[usize],
    max_degree: usize,
) -> Result<bool> {
    check_degree(max_degree)?;
    if a.generator_count() != b.generator_count() || map.len() != a.generator_count() {
        return Ok(false);
    }
    let mut seen = vec![false; map.len()];
    for &k in map {
        b.check_index(k)?;
        if std::mem::replace(&mut seen[k], true) {
            return Ok(false);
        }
    }
    for d in 2..=max_degree {
        let mut forward: HashMap<LatticeVector, LatticeVector> = HashMap::new();
        let mut backward: HashMap<LatticeVector, LatticeVector> = HashMap::new();
        for m in multisets(a.generator_count(), d) {
            let image: Vec<usize> = m.iter().map(|&k| map[k]).collect();
            let (sa, sb) = (a.sum(&m), b.sum(&image));
            if *forward.entry(sa).or_insert(sb) != sb || *backward.entry(sb).or_insert(sa) != sa {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for a generator bijection between `a` and `b` that preserves
/// the semigroup relations through degree `max_degree`. Candidate images
/// are tried in the order given by `hint` first, when supplied.
pub fn find_generator_isomorphism(
    a: &SemigroupRing,
    b: &SemigroupRing,
    max_degree: usize,
    hint: Option<&[usize]>,
) -> Result<Option<Vec<usize>>> {
    check_degree(max_degree)?;
    let count = a.generator_count();
    if count != b.generator_count() {
        return Ok(None);
    }
    let pa = PairFibers::new(a);
    let pb = PairFibers::new(b);
    let candidates: Vec<Vec<usize>> = (0..count)
        .map(|g| {
            let mut c: Vec<usize> = (0..count)
                .filter(|&h| pa.signature[g] == pb.signature[h])
                .collect();
            if let Some(hint) = hint {
                if let Some(pos) = c.iter().position(|&h| h == hint[g]) {
                    let preferred = c.remove(pos);
                    c.insert(0, preferred);
                }
            }
            c
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by_key(|&g| (candidates[g].len(), g));

    let mut search = BijectionSearch {
        a,
        b,
        pa: &pa,
        pb: &pb,
        candidates: &candidates,
        order: &order,
        map: vec![usize::MAX; count],
        used: vec![false; count],
        fiber_ab: vec![usize::MAX; pa.fiber_count],
        fiber_ba: vec![usize::MAX; pb.fiber_count],
        max_degree,
    };
    Ok(search.run(0).then(|| search.map.clone()))
}

/// Degree-2 fiber ids for every generator pair.
struct PairFibers {
    id: Vec<Vec<usize>>,
    fiber_count: usize,
    /// Sorted fiber sizes over all partners, an isomorphism invariant.
    signature: Vec<Vec<usize>>,
}

impl PairFibers {
    fn new(ring: &SemigroupRing) -> Self {
        let count = ring.generator_count();
        let mut ids: HashMap<LatticeVector, usize> = HashMap::new();
        let mut id = vec![vec![0; count]; count];
        for g in 0..count {
            for h in g..count {
                let next = ids.len();
                let f = *ids.entry(ring.generator(g) + ring.generator(h)).or_insert(next);
                id[g][h] = f;
                id[h][g] = f;
            }
        }
        let mut size = vec![0usize; ids.len()];
        for g in 0..count {
            for h in g..count {
                size[id[g][h]] += 1;
            }
        }
        let signature = (0..count)
            .map(|g| {
                let mut s: Vec<usize> = (0..count).map(|h| size[id[g][h]]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        PairFibers {
            id,
            fiber_count: ids.len(),
            signature,
        }
    }
}

struct BijectionSearch<'a> {
    a: &'a SemigroupRing,
    b: &'a SemigroupRing,
    pa: &'a PairFibers,
    pb: &'a PairFibers,
    candidates: &'a [Vec<usize>],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    fiber_ab: Vec<usize>,
    fiber_ba: Vec<usize>,
    max_degree: usize,
}

impl BijectionSearch<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return relations_preserved(self.a, self.b, &self.map, self.max_degree)
                .unwrap_or(false);
        }
        let g = self.order[depth];
        for &h in &self.candidates[g] {
            if self.used[h] {
                continue;
            }
            self.map[g] = h;
            self.used[h] = true;
            let mut touched = Vec::new();
            if self.bind_pairs(g, depth, &mut touched) && self.run(depth + 1) {
                return true;
            }
            for (fa, fb) in touched {
                self.fiber_ab[fa] = usize::MAX;
                self.fiber_ba[fb] = usize::MAX;
            }
            self.used[h] = false;
            self.map[g] = usize::MAX;
        }
        false
    }

    /// Records the fiber correspondences implied by pairs `{g, x}` with
    /// `x` already mapped; fails on any clash.
    fn bind_pairs(&mut self, g: usize, depth: usize, touched: &mut Vec<(usize, usize)>) -> bool {
        let partners = self.order[..=depth].iter().copied();
        for x in partners {
            let fa = self.pa.id[g][x];
            let fb = self.pb.id[self.map[g]][self.map[x]];
            match (self.fiber_ab[fa], self.fiber_ba[fb]) {
                (usize::MAX, usize::MAX) => {
                    self.fiber_ab[fa] = fb;
                    self.fiber_ba[fb] = fa;
                    touched.push((fa, fb));
                }
                (ya, yb) if ya == fb && yb == fa => {}
                _ => return false,
            }
        }
        true
    }
}

/// Whether the Hibi ring of `p` and the stable-set ring of its
/// comparability graph are matched, through degree `max_degree`, by a
/// relation-preserving generator bijection. The search starts from the
/// transfer map. Requires `p` to avoid the X pattern.
pub fn transfer_consistency(p: &Poset, max_degree: usize) -> Result<bool> {
    Ok(transfer_isomorphism(p, max_degree)?.is_some())
}

/// The bijection found by [`transfer_consistency`], if any.
pub fn transfer_isomorphism(p: &Poset, max_degree: usize) -> Result<Option<Vec<usize>>> {
    if p.contains_pattern(PatternKind::X).is_some() {
        return Err(Error::PatternPrecondition(PatternKind::X));
    }
    check_degree(max_degree)?;
    let hibi = hibi_ring(p)?;
    let stable = stable_set_ring(&p.comparability_graph())?;
    let hint = transfer_map(p)?;
    find_generator_isomorphism(&hibi, &stable, max_degree, Some(&hint))
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut len = COORDS;
        while len > 1 && self.coord(len - 1) == 0 {
            len -= 1;
        }
        serializer.collect_seq(self.coords(len))
    }
}

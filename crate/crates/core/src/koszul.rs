//! Strong-Koszulness oracle for semigroup rings generated in degree one.
//!
//! For each unordered generator pair `(a_i, a_j)` the monomial ideal
//! `(u_i) ∩ (u_j)` must be generated in degree two: every element `v` with
//! `v - a_i ∈ S` and `v - a_j ∈ S` has to be `w + s` for some degree-two
//! element `w` of the intersection and some `s ∈ S`. Degrees are scanned up
//! to a configurable bound, so a positive verdict means "up to that
//! degree". Membership is always answered from a precomputed
//! [`DegreeTable`].

use serde::{Serialize, Serializer};

use crate::error::{ensure_at_most, Error, Result};
use crate::graph::Graph;
use crate::toric::{stable_set_ring, DegreeTable, LatticeVector, SemigroupRing, MAX_DEGREE};

/// A degree-`degree` element of `(u_i) ∩ (u_j)` that is not a multiple of
/// any degree-two element of the intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulWitness {
    pub pair: (usize, usize),
    pub vector: LatticeVector,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulVerdict {
    pub strongly_koszul: bool,
    pub witness: Option<KoszulWitness>,
    pub degree_bound: usize,
}

/// A colon-ideal element not divisible by any degree-one generator of the
/// colon ideal. `position` is the index into the checked sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonWitness {
    pub position: usize,
    pub vector: LatticeVector,
    pub degree: usize,
}

pub(crate) fn check_bound(degree_bound: usize) -> Result<()> {
    if degree_bound < 3 {
        return Err(Error::InvalidArgument(format!(
            "oracle degree bound must be at least 3, got {degree_bound}"
        )));
    }
    ensure_at_most("oracle degree bound", degree_bound, MAX_DEGREE)
}

/// Shares one degree table across all pair checks of a ring.
pub struct KoszulOracle<'a> {
    ring: &'a SemigroupRing,
    table: DegreeTable,
    degree_bound: usize,
}

impl<'a> KoszulOracle<'a> {
    pub fn new(ring: &'a SemigroupRing, degree_bound: usize) -> Result<Self> {
        check_bound(degree_bound)?;
        Ok(KoszulOracle {
            ring,
            table: DegreeTable::build(ring, degree_bound),
            degree_bound,
        })
    }

    pub fn ring(&self) -> &SemigroupRing {
        self.ring
    }

    pub fn table(&self) -> &DegreeTable {
        &self.table
    }

    /// Degree-two elements of `(u_i) ∩ (u_j)`.
    pub fn quadratic_intersection(&self, i: usize, j: usize) -> Vec<LatticeVector> {
        let (ai, aj) = (self.ring.generator(i), self.ring.generator(j));
        let mut out: Vec<LatticeVector> = self
            .ring
            .generators()
            .iter()
            .map(|&g| ai + g)
            .filter(|&w| w.checked_sub(aj).is_some_and(|r| self.table.contains(1, r)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Least-degree, then least-vector, counterexample for the pair at a
    /// single degree `d >= 3`.
    fn failure_at(&self, i: usize, j: usize, d: usize, quadratic: &[LatticeVector]) -> Option<LatticeVector> {
        let (ai, aj) = (self.ring.generator(i), self.ring.generator(j));
        self.table
            .level(d - 1)
            .iter()
            .map(|&u| u + ai)
            .filter(|&v| v.checked_sub(aj).is_some_and(|r| self.table.contains(d - 1, r)))
            .filter(|&v| {
                !quadratic
                    .iter()
                    .any(|&w| v.checked_sub(w).is_some_and(|s| self.table.contains(d - 2, s)))
            })
            .min()
    }

    pub fn intersection_witness(&self, i: usize, j: usize) -> Result<Option<KoszulWitness>> {
        self.ring.check_index(i)?;
        self.ring.check_index(j)?;
        if i == j {
            return Err(Error::InvalidArgument(format!("pair ({i}, {j}) must be distinct")));
        }
        let quadratic = self.quadratic_intersection(i, j);
        for d in 3..=self.degree_bound {
            if let Some(vector) = self.failure_at(i, j, d, &quadratic) {
                return Ok(Some(KoszulWitness {
                    pair: (i.min(j), i.max(j)),
                    vector,
                    degree: d,
                }));
            }
        }
        Ok(None)
    }

    /// Scans degrees in increasing order and pairs lexicographically, so
    /// the witness is the least `(degree, pair, vector)`.
    pub fn verdict(&self) -> KoszulVerdict {
        let count = self.ring.generator_count();
        let quadratic: Vec<Vec<Vec<LatticeVector>>> = (0..count)
            .map(|i| {
                (0..count)
                    .map(|j| if i < j { self.quadratic_intersection(i, j) } else { Vec::new() })
                    .collect()
            })
            .collect();
        for d in 3..=self.degree_bound {
            for i in 0..count {
                for j in i + 1..count {
                    if let Some(vector) = self.failure_at(i, j, d, &quadratic[i][j]) {
                        return KoszulVerdict {
                            strongly_koszul: false,
                            witness: Some(KoszulWitness {
                                pair: (i, j),
                                vector,
                                degree: d,
                            }),
                            degree_bound: self.degree_bound,
                        };
                    }
                }
            }
        }
        KoszulVerdict {
            strongly_koszul: true,
            witness: None,
            degree_bound: self.degree_bound,
        }
    }
}

pub fn intersection_generated_in_degree_two(
    ring: &SemigroupRing,
    i: usize,
    j: usize,
    degree_bound: usize,
) -> Result<Option<KoszulWitness>> {
    KoszulOracle::new(ring, degree_bound)?.intersection_witness(i, j)
}

pub fn is_strongly_koszul(ring: &SemigroupRing, degree_bound: usize) -> Result<KoszulVerdict> {
    Ok(KoszulOracle::new(ring, degree_bound)?.verdict())
}

/// Checks the colon condition along one ordered sequence of distinct
/// generators: for each position `p >= 1`, the ideal
/// `(u_{s_0}, …, u_{s_{p-1}}) : u_{s_p}` must be generated by generators.
/// Elements of degree `2..=degree_bound` are examined.
pub fn colon_condition_direct(
    ring: &SemigroupRing,
    sequence: &[usize],
    degree_bound: usize,
) -> Result<Option<ColonWitness>> {
    if sequence.len() < 2 {
        return Err(Error::InvalidArgument("sequence needs at least two generators".into()));
    }
    for (k, &g) in sequence.iter().enumerate() {
        ring.check_index(g)?;
        if sequence[..k].contains(&g) {
            return Err(Error::InvalidArgument(format!("generator {g} repeated in sequence")));
        }
    }
    if degree_bound < 2 {
        return Err(Error::InvalidArgument(format!(
            "colon degree bound must be at least 2, got {degree_bound}"
        )));
    }
    ensure_at_most("colon degree bound", degree_bound, MAX_DEGREE)?;
    let table = DegreeTable::build(ring, degree_bound + 1);
    // v lies in (a_{s_0}, …) : a_c  iff  v + a_c - a_{s_k} ∈ S for some k.
    let in_colon = |v: LatticeVector, prefix: &[usize], c: usize| {
        let d = v.degree();
        let shifted = v + ring.generator(c);
        prefix.iter().any(|&k| {
            shifted
                .checked_sub(ring.generator(k))
                .is_some_and(|r| table.contains(d, r))
        })
    };
    let mut best: Option<ColonWitness> = None;
    for d in 2..=degree_bound {
        for p in 1..sequence.len() {
            let (prefix, c) = (&sequence[..p], sequence[p]);
            let linear: Vec<LatticeVector> = ring
                .generators()
                .iter()
                .copied()
                .filter(|&g| in_colon(g, prefix, c))
                .collect();
            let failure = table
                .sorted_level(d)
                .into_iter()
                .filter(|&v| in_colon(v, prefix, c))
                .find(|&v| {
                    !linear
                        .iter()
                        .any(|&g| v.checked_sub(g).is_some_and(|s| table.contains(d - 1, s)))
                });
            if let Some(vector) = failure {
                let w = ColonWitness { position: p, vector, degree: d };
                if best.as_ref().is_none_or(|b| (w.position, w.vector) < (b.position, b.vector)) {
                    best = Some(w);
                }
            }
        }
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

/// Re-verifies a witness without the degree table: membership is decided
/// by enumerating generator multisets directly.
pub fn witness_is_valid(ring: &SemigroupRing, witness: &KoszulWitness) -> bool {
    let (i, j) = witness.pair;
    if i == j || i >= ring.generator_count() || j >= ring.generator_count() {
        return false;
    }
    let v = witness.vector;
    let d = witness.degree;
    if v.degree() != d || d < 3 {
        return false;
    }
    let member = |x: LatticeVector, deg: usize| {
        crate::toric::multisets(ring.generator_count(), deg)
            .iter()
            .any(|m| ring.sum(m) == x)
    };
    let in_intersection = |x: LatticeVector, deg: usize| {
        [i, j].iter().all(|&k| {
            x.checked_sub(ring.generator(k))
                .is_some_and(|r| member(r, deg - 1))
        })
    };
    if !member(v, d) || !in_intersection(v, d) {
        return false;
    }
    // No degree-two intersection element divides v.
    crate::toric::multisets(ring.generator_count(), 2)
        .iter()
        .map(|m| ring.sum(m))
        .filter(|&w| in_intersection(w, 2))
        .all(|w| !v.checked_sub(w).is_some_and(|s| member(s, d - 2)))
}

/// Strong Koszulness of `k[Q_G]` passes to every induced subgraph. `true`
/// when the premise fails.
pub fn heredity_check(g: &Graph, degree_bound: usize) -> Result<bool> {
    ensure_at_most("heredity check vertex count", g.n(), 6)?;
    if !is_strongly_koszul(&stable_set_ring(g)?, degree_bound)?.strongly_koszul {
        return Ok(true);
    }
    for w in g.vertices().subsets().skip(1) {
        let sub = g.induced_subgraph(w)?;
        if !is_strongly_koszul(&stable_set_ring(&sub)?, degree_bound)?.strongly_koszul {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{"strongly_koszul": …, "degree_bound": D, "witness": {...} | null}`.
#[derive(Serialize)]
struct VerdictJson {
    strongly_koszul: bool,
    degree_bound: usize,
    witness: Option<WitnessJson>,
}

#[derive(Serialize)]
struct WitnessJson {
    pair: [usize; 2],
    vector: Vec<u8>,
    degree: usize,
}

impl KoszulVerdict {
    /// JSON form with witness vectors written in the ring's full
    /// coordinate length (degree coordinate first).
    pub fn to_json_value(&self, ring: &SemigroupRing) -> serde_json::Value {
        let json = VerdictJson {
            strongly_koszul: self.strongly_koszul,
            degree_bound: self.degree_bound,
            witness: self.witness.as_ref().map(|w| WitnessJson {
                pair: [w.pair.0, w.pair.1],
                vector: ring.coords(w.vector),
                degree: w.degree,
            }),
        };
        serde_json::to_value(json).expect("verdict serializes")
    }
}

impl Serialize for KoszulWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("KoszulWitness", 3)?;
        st.serialize_field("pair", &[self.pair.0, self.pair.1])?;
        st.serialize_field("vector", &self.vector)?;
        st.serialize_field("degree", &self.degree)?;
        st.end()
    }
}

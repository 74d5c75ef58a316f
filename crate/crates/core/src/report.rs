//! Batch classification, table reproduction and exhaustive cross-checks of
//! the graph-class and ring-theoretic characterizations.
//!
//! Work over graph or poset lists fans out to a rayon pool; results are
//! collected in input order, so reports are identical for any worker count.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, enumerate_graphs, CanonicalForm};
use crate::classes;
use crate::error::{ensure_at_most, Error, Result};
use crate::graph::Graph;
use crate::invariants::{is_chordal, InvariantBundle};
use crate::koszul::{check_bound, is_strongly_koszul};
use crate::poset::{enumerate_posets, PatternKind};
use crate::toric::{hibi_ring, stable_set_ring};

/// Largest graph [`classify`] accepts.
pub const CLASSIFY_MAX_VERTICES: usize = 7;
/// Largest graph for which [`classify`] runs the Koszul oracle.
pub const KOSZUL_FLAG_MAX_VERTICES: usize = 6;
/// Largest vertex count for [`run_table`] and [`verify_theorems`].
pub const REPORT_MAX_VERTICES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub bipartite: bool,
    pub almost_bipartite: bool,
    pub chordal: bool,
    pub perfect: bool,
    pub comparability: bool,
    pub hl_comparability: bool,
    pub threshold: bool,
    pub trivially_perfect: bool,
    /// Oracle verdict up to the record's degree bound; absent above
    /// [`KOSZUL_FLAG_MAX_VERTICES`].
    pub strongly_koszul: Option<bool>,
}

impl ClassFlags {
    /// The implications every graph must satisfy, as a list of violated
    /// ones (empty when consistent).
    pub fn violated_implications(&self) -> Vec<&'static str> {
        let rules = [
            (self.threshold && !self.trivially_perfect, "threshold => trivially_perfect"),
            (self.trivially_perfect && !self.perfect, "trivially_perfect => perfect"),
            (self.hl_comparability && !self.comparability, "hl_comparability => comparability"),
            (self.bipartite && !self.comparability, "bipartite => comparability"),
        ];
        rules.iter().filter(|r| r.0).map(|r| r.1).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub invariants: InvariantBundle,
    pub flags: ClassFlags,
    pub degree_bound: usize,
}

/// Runs every recognizer on `g` and, for small graphs, the Koszul oracle
/// on its stable-set ring.
pub fn classify(g: &Graph, degree_bound: usize) -> Result<ClassificationRecord> {
    ensure_at_most("classified graph vertex count", g.n(), CLASSIFY_MAX_VERTICES)?;
    check_bound(degree_bound)?;
    let strongly_koszul = if g.n() <= KOSZUL_FLAG_MAX_VERTICES {
        Some(is_strongly_koszul(&stable_set_ring(g)?, degree_bound)?.strongly_koszul)
    } else {
        None
    };
    let flags = ClassFlags {
        bipartite: classes::is_bipartite(g),
        almost_bipartite: classes::is_almost_bipartite(g),
        chordal: is_chordal(g),
        perfect: classes::is_perfect_desk(g)?,
        comparability: classes::is_comparability(g)?,
        hl_comparability: classes::is_hl_comparability(g)?,
        threshold: classes::is_threshold_constructive(g),
        trivially_perfect: classes::is_trivially_perfect_by_definition(g)?,
        strongly_koszul,
    };
    Ok(ClassificationRecord {
        graph6: g.to_graph6(),
        n: g.n(),
        edges: g.edge_count(),
        invariants: InvariantBundle::of(g),
        flags,
        degree_bound,
    })
}

/// Number of records carrying each flag.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub total: usize,
    pub bipartite: usize,
    pub almost_bipartite: usize,
    pub chordal: usize,
    pub perfect: usize,
    pub comparability: usize,
    pub hl_comparability: usize,
    pub threshold: usize,
    pub trivially_perfect: usize,
    pub strongly_koszul: usize,
}

impl ClassCounts {
    pub fn tally(records: &[ClassificationRecord]) -> Self {
        let mut c = ClassCounts::default();
        for r in records {
            let f = &r.flags;
            c.total += 1;
            c.bipartite += f.bipartite as usize;
            c.almost_bipartite += f.almost_bipartite as usize;
            c.chordal += f.chordal as usize;
            c.perfect += f.perfect as usize;
            c.comparability += f.comparability as usize;
            c.hl_comparability += f.hl_comparability as usize;
            c.threshold += f.threshold as usize;
            c.trivially_perfect += f.trivially_perfect as usize;
            c.strongly_koszul += (f.strongly_koszul == Some(true)) as usize;
        }
        c
    }

    fn rows(&self) -> [(&'static str, usize); 10] {
        [
            ("total", self.total),
            ("bipartite", self.bipartite),
            ("almost_bipartite", self.almost_bipartite),
            ("chordal", self.chordal),
            ("perfect", self.perfect),
            ("comparability", self.comparability),
            ("hl_comparability", self.hl_comparability),
            ("threshold", self.threshold),
            ("trivially_perfect", self.trivially_perfect),
            ("strongly_koszul", self.strongly_koszul),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub n: usize,
    pub degree_bound: usize,
    pub counts: ClassCounts,
    pub records: Vec<ClassificationRecord>,
}

/// Classifies every connected graph on `n` vertices, in canonical order.
/// `jobs` is the worker count; `0` uses every available core.
pub fn run_table(n: usize, degree_bound: usize, jobs: usize) -> Result<TableReport> {
    ensure_at_most("table vertex count", n, REPORT_MAX_VERTICES)?;
    check_bound(degree_bound)?;
    let graphs = enumerate_graphs(n, true)?;
    let records = par_map(jobs, &graphs, |g| classify(g, degree_bound))?
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(TableReport {
        n,
        degree_bound,
        counts: ClassCounts::tally(&records),
        records,
    })
}

/// Deliberate recognizer corruption, used to confirm that the checks in
/// [`verify_theorems`] can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fault {
    /// `is_c4_p4_free` answers the opposite on graphs with an even number
    /// of edges.
    FlipC4P4Free,
    /// The Koszul oracle verdict is negated for every ring.
    NegateKoszul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub degree_bound: usize,
    pub jobs: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            degree_bound: crate::toric::DEFAULT_DEGREE_BOUND,
            jobs: 0,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: usize,
    pub passed: bool,
    /// graph6 string or poset JSON of the first failing case.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub degree_bound: usize,
    pub fault: Option<Fault>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every cross-characterization check over all graphs (and posets)
/// with at most `n` vertices (elements). Failures are report content, not
/// errors.
pub fn verify_theorems(n: usize, options: VerifyOptions) -> Result<VerificationReport> {
    ensure_at_most("verification vertex count", n, REPORT_MAX_VERTICES)?;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    check_bound(options.degree_bound)?;
    let ctx = Checker::new(n, options)?;
    let checks = vec![
        ctx.koszul_iff_c4_p4_free()?,
        ctx.trivially_perfect_characterization()?,
        ctx.tree_orientation()?,
        ctx.trivially_perfect_implies_perfect()?,
        ctx.perfect_complement()?,
        ctx.koszul_heredity()?,
        ctx.hibi_koszul_iff_n_free()?,
        ctx.threshold_characterization()?,
        ctx.hl_complete_multipartite()?,
        ctx.hl_equals_comparability()?,
        ctx.almost_bipartite_iff_k4_free()?,
        ctx.flag_implications()?,
    ];
    Ok(VerificationReport {
        n,
        degree_bound: options.degree_bound,
        fault: options.fault,
        checks,
    })
}

/// Largest size for the checks that are only claimed on small instances.
const SMALL_CASE_MAX: usize = 5;

struct Checker {
    n: usize,
    options: VerifyOptions,
    /// All graphs with 1..=n vertices, by vertex count then canonical order.
    all: Vec<Graph>,
    connected: Vec<Graph>,
}

impl Checker {
    fn new(n: usize, options: VerifyOptions) -> Result<Self> {
        let mut all = Vec::new();
        for k in 1..=n {
            all.extend(enumerate_graphs(k, false)?);
        }
        let connected = all.iter().filter(|g| g.is_connected()).cloned().collect();
        Ok(Checker { n, options, all, connected })
    }

    fn c4_p4_free(&self, g: &Graph) -> bool {
        let honest = classes::is_c4_p4_free(g);
        match self.options.fault {
            Some(Fault::FlipC4P4Free) if g.edge_count().is_multiple_of(2) => !honest,
            _ => honest,
        }
    }

    fn koszul(&self, verdict: bool) -> bool {
        verdict ^ (self.options.fault == Some(Fault::NegateKoszul))
    }

    fn graph_koszul(&self, g: &Graph) -> Result<bool> {
        let verdict = is_strongly_koszul(&stable_set_ring(g)?, self.options.degree_bound)?;
        Ok(self.koszul(verdict.strongly_koszul))
    }

    /// Evaluates `holds` on every graph in parallel and reports the first
    /// failure in list order.
    fn over_graphs(
        &self,
        name: &'static str,
        statement: &'static str,
        graphs: &[Graph],
        holds: impl Fn(&Graph) -> Result<bool> + Sync,
    ) -> Result<CheckResult> {
        let outcomes = par_map(self.options.jobs, graphs, |g| holds(g))?;
        let mut counterexample = None;
        for (g, outcome) in graphs.iter().zip(outcomes) {
            if !outcome? {
                counterexample = Some(g.to_graph6());
                break;
            }
        }
        Ok(CheckResult {
            name,
            statement,
            cases: graphs.len(),
            passed: counterexample.is_none(),
            counterexample,
        })
    }

    fn small(&self, graphs: &[Graph]) -> Vec<Graph> {
        graphs.iter().filter(|g| g.n() <= SMALL_CASE_MAX).cloned().collect()
    }

    fn koszul_iff_c4_p4_free(&self) -> Result<CheckResult> {
        self.over_graphs(
            "koszul-iff-c4-p4-free",
            "connected G: k[Q_G] strongly Koszul <=> G has no induced C4 or P4",
            &self.connected,
            |g| Ok(self.graph_koszul(g)? == self.c4_p4_free(g)),
        )
    }

    fn trivially_perfect_characterization(&self) -> Result<CheckResult> {
        self.over_graphs(
            "trivially-perfect-characterization",
            "all G: alpha = m on every induced subgraph <=> no induced C4 or P4",
            &self.all,
            |g| Ok(classes::is_trivially_perfect_by_definition(g)? == self.c4_p4_free(g)),
        )
    }

    fn tree_orientation(&self) -> Result<CheckResult> {
        self.over_graphs(
            "tree-orientation",
            "connected G: trivially perfect <=> C4/P4-free <=> comparability graph of a tree poset",
            &self.connected,
            |g| {
                let free = self.c4_p4_free(g);
                Ok(classes::is_trivially_perfect_by_definition(g)? == free
                    && classes::has_tree_orientation(g)? == free)
            },
        )
    }

    fn trivially_perfect_implies_perfect(&self) -> Result<CheckResult> {
        self.over_graphs(
            "trivially-perfect-implies-perfect",
            "all G: trivially perfect => perfect",
            &self.all,
            |g| Ok(!self.c4_p4_free(g) || classes::is_perfect_desk(g)?),
        )
    }

    fn perfect_complement(&self) -> Result<CheckResult> {
        self.over_graphs(
            "perfect-complement",
            "all G: G perfect <=> complement of G perfect",
            &self.all,
            |g| Ok(classes::is_perfect_desk(g)? == classes::is_perfect_desk(&g.complement())?),
        )
    }

    fn koszul_heredity(&self) -> Result<CheckResult> {
        // One oracle call per isomorphism class, looked up by canonical form.
        let verdicts: Vec<Result<bool>> =
            par_map(self.options.jobs, &self.all, |g| self.graph_koszul(g))?;
        let mut by_form: HashMap<CanonicalForm, bool> = HashMap::new();
        for (g, v) in self.all.iter().zip(verdicts) {
            by_form.insert(canonical_form(g)?, v?);
        }
        let lookup = |g: &Graph| -> Result<bool> { Ok(by_form[&canonical_form(g)?]) };
        self.over_graphs(
            "koszul-heredity",
            "all G: k[Q_G] strongly Koszul => k[Q_H] strongly Koszul for every induced subgraph H",
            &self.all,
            |g| {
                if !lookup(g)? {
                    return Ok(true);
                }
                for w in g.vertices().subsets().skip(1) {
                    if !lookup(&g.induced_subgraph(w)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        )
    }

    fn hibi_koszul_iff_n_free(&self) -> Result<CheckResult> {
        let mut posets = Vec::new();
        for k in 1..=self.n {
            posets.extend(enumerate_posets(k)?);
        }
        let outcomes = par_map(self.options.jobs, &posets, |p| -> Result<bool> {
            let verdict = is_strongly_koszul(&hibi_ring(p)?, self.options.degree_bound)?;
            Ok(self.koszul(verdict.strongly_koszul) == p.contains_pattern(PatternKind::N).is_none())
        })?;
        let mut counterexample = None;
        for (p, outcome) in posets.iter().zip(outcomes) {
            if !outcome? {
                counterexample = Some(p.to_json());
                break;
            }
        }
        Ok(CheckResult {
            name: "hibi-koszul-iff-n-free",
            statement: "posets P: Hibi ring of P strongly Koszul <=> P avoids the N pattern",
            cases: posets.len(),
            passed: counterexample.is_none(),
            counterexample,
        })
    }

    fn threshold_characterization(&self) -> Result<CheckResult> {
        self.over_graphs(
            "threshold-characterization",
            "all G: built from isolated vertices and suspensions <=> no induced C4, P4 or 2K2",
            &self.all,
            |g| Ok(classes::is_threshold_constructive(g) == classes::is_threshold_forbidden(g)),
        )
    }

    fn hl_complete_multipartite(&self) -> Result<CheckResult> {
        let graphs: Vec<Graph> = partitions(self.n)
            .iter()
            .map(|parts| Graph::complete_multipartite(parts))
            .collect::<Result<_>>()?;
        self.over_graphs(
            "hl-complete-multipartite",
            "complete r-partite G: HL-comparability <=> at least r-2 singleton parts",
            &graphs,
            |g| {
                let parts = multipartite_parts(g);
                let singletons = parts.iter().filter(|&&s| s == 1).count();
                Ok(classes::is_hl_comparability(g)? == (singletons + 2 >= parts.len()))
            },
        )
    }

    fn hl_equals_comparability(&self) -> Result<CheckResult> {
        self.over_graphs(
            "hl-equals-comparability",
            "all G on at most 5 vertices: HL-comparability <=> comparability",
            &self.small(&self.all),
            |g| Ok(classes::is_hl_comparability(g)? == classes::is_comparability(g)?),
        )
    }

    fn almost_bipartite_iff_k4_free(&self) -> Result<CheckResult> {
        let k4_free = |g: &Graph| crate::invariants::clique_number(g) < 4;
        self.over_graphs(
            "almost-bipartite-iff-k4-free",
            "all G on at most 5 vertices: almost bipartite <=> no K4",
            &self.small(&self.all),
            |g| Ok(classes::is_almost_bipartite(g) == k4_free(g)),
        )
    }

    fn flag_implications(&self) -> Result<CheckResult> {
        let degree_bound = self.options.degree_bound;
        self.over_graphs(
            "flag-implications",
            "every classification record satisfies the class inclusions",
            &self.all,
            |g| Ok(classify(g, degree_bound)?.flags.violated_implications().is_empty()),
        )
    }
}

/// Partitions of every `k` in `1..=n` into positive parts, non-increasing.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            current.push(part);
            extend(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for k in 1..=n {
        extend(k, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Part sizes of a complete multipartite graph: the classes of the
/// "non-adjacent or equal" relation.
fn multipartite_parts(g: &Graph) -> Vec<usize> {
    let mut seen = crate::vertex_set::VertexSet::EMPTY;
    let mut parts = Vec::new();
    for v in 0..g.n() {
        if !seen.contains(v) {
            let part = g.vertices().difference(g.neighbors(v));
            seen = seen.union(part);
            parts.push(part.len());
        }
    }
    parts
}

/// Order-preserving map on a pool of `jobs` workers (`0` = all cores,
/// `1` = run inline).
fn par_map<T: Sync, R: Send>(jobs: usize, items: &[T], f: impl Fn(&T) -> R + Sync) -> Result<Vec<R>> {
    if jobs == 1 {
        return Ok(items.iter().map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| items.par_iter().map(&f).collect()))
}

fn mark(flag: bool) -> &'static str {
    if flag {
        "x"
    } else {
        "."
    }
}

impl fmt::Display for ClassificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, fl) = (&self.invariants, &self.flags);
        write!(
            f,
            "{:<10} {:>2} {:>3} | {:>2} {:>2} {:>2} {:>2} {:>2} | {:>3} {:>3} {:>3} {:>3} {:>3} {:>3} {:>3} {:>3} {:>3}",
            self.graph6,
            self.n,
            self.edges,
            i.alpha,
            i.m,
            i.omega,
            i.theta,
            i.chi,
            mark(fl.bipartite),
            mark(fl.almost_bipartite),
            mark(fl.chordal),
            mark(fl.perfect),
            mark(fl.comparability),
            mark(fl.hl_comparability),
            mark(fl.threshold),
            mark(fl.trivially_perfect),
            match fl.strongly_koszul {
                Some(b) => mark(b),
                None => "-",
            },
        )
    }
}

/// Column header matching the [`ClassificationRecord`] text layout.
pub const RECORD_HEADER: &str =
    "graph6      n   m |  a  M  w  t  x | bip alm chd prf cmp hlc thr tpf skz";

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "connected graphs on {} vertices (degree bound {})", self.n, self.degree_bound)?;
        writeln!(f, "{RECORD_HEADER}")?;
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        writeln!(f)?;
        for (name, count) in self.counts.rows() {
            writeln!(f, "{name:<18} {count:>5}")?;
        }
        Ok(())
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<36} {:>5} cases", self.name, self.cases)?;
        if let Some(c) = &self.counterexample {
            write!(f, "  counterexample {c}")?;
        }
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verification up to {} vertices (degree bound {})", self.n, self.degree_bound)?;
        if let Some(fault) = self.fault {
            write!(f, " with injected fault {fault:?}")?;
        }
        writeln!(f)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines are
//! always printed.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{brute_graph_count, brute_posets, q1, q2};
use stable_koszul::canon::enumerate_graphs;
use stable_koszul::classes::*;
use stable_koszul::graph::Graph;
use stable_koszul::invariants::InvariantBundle;
use stable_koszul::koszul::{heredity_check, is_strongly_koszul, witness_is_valid};
use stable_koszul::poset::{enumerate_posets, PatternKind, Poset};
use stable_koszul::toric::{
    hibi_ring, hilbert_series_prefix, stable_set_ring, transfer_consistency, LatticeVector,
};
use stable_koszul::vertex_set::VertexSet;

const D: usize = 4;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(failure())
    }
}

fn graphs(max_n: usize, connected: bool) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphs(n, connected).unwrap())
        .collect()
}

fn koszul(ring: &stable_koszul::toric::SemigroupRing) -> bool {
    is_strongly_koszul(ring, D).unwrap().strongly_koszul
}

fn koszul_matches_forbidden_subgraphs() -> Outcome {
    let six = enumerate_graphs(6, true).unwrap();
    ensure(six.len() == 112, || format!("{} connected 6-vertex graphs", six.len()))?;
    let all = graphs(6, true);
    for g in &all {
        let sk = koszul(&stable_set_ring(g).unwrap());
        ensure(sk == is_c4_p4_free(g), || format!("{g}: oracle {sk}"))?;
    }
    Ok(format!("{} connected graphs, n <= 6", all.len()))
}

fn trivially_perfect_definition() -> Outcome {
    let all = graphs(7, false);
    for g in &all {
        let by_def = is_trivially_perfect_by_definition(g).unwrap();
        ensure(by_def == is_c4_p4_free(g), || format!("{g}: definition says {by_def}"))?;
    }
    Ok(format!("{} graphs, n <= 7", all.len()))
}

fn three_way_equivalence() -> Outcome {
    let all = graphs(6, true);
    for g in &all {
        let tp = is_trivially_perfect_by_definition(g).unwrap();
        let free = is_c4_p4_free(g);
        let tree = has_tree_orientation(g).unwrap();
        ensure(tp == free && free == tree, || format!("{g}: {tp} {free} {tree}"))?;
    }
    Ok(format!("{} connected graphs, n <= 6", all.len()))
}

fn perfection() -> Outcome {
    let all = graphs(6, false);
    for g in &all {
        let perfect = is_perfect_desk(g).unwrap();
        ensure(!is_c4_p4_free(g) || perfect, || format!("{g}: trivially perfect, not perfect"))?;
        let co = is_perfect_desk(&g.complement()).unwrap();
        ensure(perfect == co, || format!("{g}: perfect {perfect}, complement {co}"))?;
    }
    Ok(format!("{} graphs, n <= 6", all.len()))
}

fn hibi_koszul_matches_n_pattern() -> Outcome {
    let brute = brute_posets(5).len();
    let ours = enumerate_posets(5).unwrap().len();
    ensure(brute == 63 && ours == 63, || format!("posets on 5 elements: {ours}, brute {brute}"))?;
    let q = q1();
    ensure(!koszul(&hibi_ring(&q).unwrap()), || "Q1 tests strongly Koszul".into())?;
    ensure(q.contains_pattern(PatternKind::N).is_some(), || "Q1 tests N-free".into())?;
    let mut cases = 0;
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            let sk = koszul(&hibi_ring(&p).unwrap());
            let n_free = p.contains_pattern(PatternKind::N).is_none();
            ensure(sk == n_free, || format!("{}: oracle {sk}, N-free {n_free}", p.to_json()))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} posets, <= 5 elements"))
}

fn transfer_instances() -> Outcome {
    for (name, p) in [("Q1", q1()), ("Q2", q2())] {
        ensure(transfer_consistency(&p, 3).unwrap(), || format!("{name}: no transfer"))?;
        let a = hilbert_series_prefix(&hibi_ring(&p).unwrap(), 3).unwrap();
        let b = hilbert_series_prefix(&stable_set_ring(&p.comparability_graph()).unwrap(), 3).unwrap();
        ensure(a == b, || format!("{name}: Hilbert functions {a:?} vs {b:?}"))?;
    }
    let mut cases = 0;
    for n in 1..=4 {
        for p in enumerate_posets(n).unwrap() {
            if p.contains_pattern(PatternKind::X).is_some() {
                continue;
            }
            ensure(transfer_consistency(&p, 3).unwrap(), || format!("{}: no transfer", p.to_json()))?;
            cases += 1;
        }
    }
    Ok(format!("Q1, Q2 and {cases} X-free posets, <= 4 elements"))
}

fn c4_p4_witnesses() -> Outcome {
    let mut found = Vec::new();
    for (name, g) in [("C4", Graph::cycle(4).unwrap()), ("P4", Graph::path(4).unwrap())] {
        let ring = stable_set_ring(&g).unwrap();
        let w = is_strongly_koszul(&ring, D)
            .unwrap()
            .witness
            .ok_or_else(|| format!("{name}: no witness"))?;
        ensure(w.degree == 3, || format!("{name}: witness in degree {}", w.degree))?;
        ensure(witness_is_valid(&ring, &w), || format!("{name}: witness does not re-verify"))?;
        found.push(format!("{name} pair {:?} {:?}", w.pair, ring.coords(w.vector)));
    }
    Ok(found.join("; "))
}

fn heredity() -> Outcome {
    let mut cases = 0;
    for g in graphs(5, true).iter().filter(|g| is_c4_p4_free(g)) {
        ensure(koszul(&stable_set_ring(g).unwrap()), || format!("{g}: fails the oracle"))?;
        ensure(heredity_check(g, D).unwrap(), || format!("{g}: an induced subgraph fails"))?;
        cases += 1;
    }
    Ok(format!("{cases} trivially perfect connected graphs, n <= 5"))
}

fn threshold() -> Outcome {
    let all = graphs(6, false);
    for g in &all {
        let (c, f) = (is_threshold_constructive(g), is_threshold_forbidden(g));
        ensure(c == f, || format!("{g}: constructive {c}, forbidden {f}"))?;
    }
    let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    ensure(
        is_trivially_perfect_by_definition(&two_k2).unwrap() && !is_threshold_constructive(&two_k2),
        || "2K2 misclassified".into(),
    )?;
    Ok(format!("{} graphs, n <= 6; 2K2 trivially perfect, not threshold", all.len()))
}

/// Partitions of `n` into non-increasing parts.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=max.min(n))
        .rev()
        .flat_map(|first| {
            partitions(n - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn hl_comparability_rules() -> Outcome {
    let mut multipartite = 0;
    for n in 1..=6 {
        for parts in partitions(n, n) {
            let g = Graph::complete_multipartite(&parts).unwrap();
            let singletons = parts.iter().filter(|&&p| p == 1).count();
            let rule = singletons + 2 >= parts.len();
            let hl = is_hl_comparability(&g).unwrap();
            ensure(hl == rule, || format!("K{parts:?}: hl {hl}, rule {rule}"))?;
            multipartite += 1;
        }
    }
    let small = graphs(5, false);
    for g in &small {
        let (hl, cmp) = (is_hl_comparability(g).unwrap(), is_comparability(g).unwrap());
        ensure(hl == cmp, || format!("{g}: hl {hl}, comparability {cmp}"))?;
        let k4_free = InvariantBundle::of(g).omega < 4;
        let ab = is_almost_bipartite(g);
        ensure(ab == k4_free, || format!("{g}: almost bipartite {ab}, K4-free {k4_free}"))?;
    }
    Ok(format!("{multipartite} complete multipartite graphs; {} graphs, n <= 5", small.len()))
}

fn example_poset_fixtures() -> Outcome {
    // Labels 1..4 of the example are elements 0..3.
    let listed: [&[usize]; 8] = [&[], &[1], &[2], &[1, 2], &[2, 4], &[1, 2, 3], &[1, 2, 4], &[1, 2, 3, 4]];
    let mut expected: Vec<VertexSet> =
        listed.iter().map(|s| s.iter().map(|&x| x - 1).collect()).collect();
    expected.sort_by(|a, b| a.lex_cmp(*b));
    let p: Poset = q2();
    let ideals = p.ideals();
    ensure(ideals == expected, || format!("ideals {ideals:?}"))?;
    let ring = hibi_ring(&p).unwrap();
    let mut generators: Vec<LatticeVector> = ring.generators().to_vec();
    let mut monomials: Vec<LatticeVector> =
        expected.iter().map(|&i| LatticeVector::homogenized(i, 4)).collect();
    generators.sort();
    monomials.sort();
    ensure(generators == monomials, || format!("generators {generators:?}"))?;
    Ok("8 ideals, 8 generators t*x^I".into())
}

fn enumeration_fixtures() -> Outcome {
    let six = enumerate_graphs(6, true).unwrap().len();
    ensure(six == 112, || format!("{six} connected 6-vertex graphs"))?;
    for n in [4, 5] {
        for connected in [false, true] {
            let ours = enumerate_graphs(n, connected).unwrap().len();
            let brute = brute_graph_count(n, connected);
            ensure(ours == brute, || format!("n={n} connected={connected}: {ours} vs {brute}"))?;
        }
    }
    Ok("112 connected on 6; n = 4, 5 match brute-force dedup".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("strongly Koszul iff C4/P4-free on connected graphs", koszul_matches_forbidden_subgraphs),
        ("trivially perfect definition iff C4/P4-free", trivially_perfect_definition),
        ("trivially perfect iff C4/P4-free iff tree orientation", three_way_equivalence),
        ("trivially perfect implies perfect; perfection self-complementary", perfection),
        ("Hibi ring strongly Koszul iff N-free", hibi_koszul_matches_n_pattern),
        ("transfer between Hibi and stable-set rings", transfer_instances),
        ("degree-3 witnesses for C4 and P4", c4_p4_witnesses),
        ("heredity of strong Koszulness", heredity),
        ("threshold recognizers agree", threshold),
        ("HL-comparability and almost-bipartite rules", hl_comparability_rules),
        ("four-element example: ideals and generators", example_poset_fixtures),
        ("enumeration counts", enumeration_fixtures),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail}) [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

mod common;

use common::*;
use stable_koszul::canon::enumerate_graphs;
use stable_koszul::graph::Graph;
use stable_koszul::report::*;
use stable_koszul::Error;

#[test]
fn table_for_six_vertices() {
    let report = run_table(6, 4, 0).unwrap();
    let c = report.counts;
    assert_eq!(c.total, 112);
    assert_eq!(report.records.len(), 112);
    // Frozen from a full run; the trivially perfect and strongly Koszul
    // columns are re-derived below from a brute-force subgraph search.
    assert_eq!(
        [
            c.bipartite,
            c.almost_bipartite,
            c.chordal,
            c.perfect,
            c.comparability,
            c.hl_comparability,
            c.threshold,
            c.trivially_perfect,
            c.strongly_koszul,
        ],
        [17, 67, 58, 105, 101, 98, 16, 20, 20]
    );
    let brute_tp = enumerate_graphs(6, true).unwrap().iter().filter(|g| brute_c4_p4_free(g)).count();
    assert_eq!(c.trivially_perfect, brute_tp);
    assert_eq!(c.strongly_koszul, brute_tp);
    for r in &report.records {
        assert_eq!(r.n, 6);
        assert!(r.flags.violated_implications().is_empty(), "{}", r.graph6);
        assert_eq!(r.flags.strongly_koszul, Some(r.flags.trivially_perfect), "{}", r.graph6);
    }
}

#[test]
fn record_fixtures() {
    let c4 = classify(&Graph::cycle(4).unwrap(), 4).unwrap();
    assert!(c4.flags.bipartite && c4.flags.comparability && c4.flags.perfect);
    assert!(!c4.flags.chordal && !c4.flags.trivially_perfect && !c4.flags.threshold);
    assert_eq!(c4.flags.strongly_koszul, Some(false));
    assert_eq!((c4.invariants.alpha, c4.invariants.m), (2, 4));

    let k6 = classify(&Graph::complete(6).unwrap(), 4).unwrap();
    assert!(k6.flags.threshold && k6.flags.chordal && !k6.flags.almost_bipartite);
    assert_eq!(k6.flags.strongly_koszul, Some(true));

    let k222 = classify(&Graph::complete_multipartite(&[2, 2, 2]).unwrap(), 4).unwrap();
    assert!(k222.flags.comparability && !k222.flags.hl_comparability);

    // Seven vertices: classified, but the oracle column is left empty.
    let k7 = classify(&Graph::complete(7).unwrap(), 4).unwrap();
    assert_eq!(k7.flags.strongly_koszul, None);
    assert!(matches!(classify(&Graph::empty(8).unwrap(), 4), Err(Error::TooLarge { .. })));
    assert!(classify(&Graph::cycle(4).unwrap(), 2).is_err());
}

#[test]
fn record_serialization() {
    let r = classify(&Graph::complete(2).unwrap(), 4).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["graph6"], "A_");
    assert_eq!(v["n"], 2);
    assert_eq!(v["edges"], 1);
    assert_eq!(v["flags"]["strongly_koszul"], true);
    assert_eq!(v["degree_bound"], 4);
    let row = r.to_string();
    assert!(row.starts_with("A_"), "{row}");
    assert_eq!(row.len(), RECORD_HEADER.len(), "{row}");
}

#[test]
fn table_is_identical_for_any_worker_count() {
    let serial = run_table(5, 4, 1).unwrap();
    let parallel = run_table(5, 4, 4).unwrap();
    assert_eq!(serial, parallel);
    assert_eq!(
        serde_json::to_string(&serial).unwrap(),
        serde_json::to_string(&run_table(5, 4, 0).unwrap()).unwrap()
    );
    assert_eq!(serial.to_string(), parallel.to_string());
}

#[test]
fn table_rejects_out_of_range_input() {
    assert!(matches!(run_table(7, 4, 1), Err(Error::TooLarge { .. })));
    assert!(run_table(4, 7, 1).is_err());
}

#[test]
fn verification_passes_through_five() {
    let options = VerifyOptions { jobs: 1, ..VerifyOptions::default() };
    let report = verify_theorems(5, options).unwrap();
    assert_eq!(report.checks.len(), 12);
    assert!(report.all_passed(), "{report}");
    assert!(report.checks.iter().all(|c| c.cases > 0 && c.counterexample.is_none()));
    let text = report.to_string();
    assert!(text.ends_with("12 checks, 0 failed\n"), "{text}");
    assert!(verify_theorems(0, options).is_err());
    assert!(verify_theorems(7, options).is_err());
}

#[test]
fn verification_is_deterministic() {
    let a = verify_theorems(4, VerifyOptions { jobs: 1, ..Default::default() }).unwrap();
    let b = verify_theorems(4, VerifyOptions { jobs: 3, ..Default::default() }).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn injected_faults_are_caught() {
    let flipped = verify_theorems(
        5,
        VerifyOptions { fault: Some(Fault::FlipC4P4Free), ..Default::default() },
    )
    .unwrap();
    assert!(!flipped.all_passed());
    let failed = flipped.check("koszul-iff-c4-p4-free").unwrap();
    assert!(!failed.passed);
    let code = failed.counterexample.as_deref().unwrap();
    // The counterexample must really be misjudged by the corrupted
    // recognizer: it has an even number of edges.
    assert_eq!(Graph::from_graph6(code).unwrap().edge_count() % 2, 0);
    assert!(!flipped.check("trivially-perfect-characterization").unwrap().passed);

    let negated = verify_theorems(
        4,
        VerifyOptions { fault: Some(Fault::NegateKoszul), ..Default::default() },
    )
    .unwrap();
    assert!(!negated.check("koszul-iff-c4-p4-free").unwrap().passed);
    assert!(!negated.check("hibi-koszul-iff-n-free").unwrap().passed);
    // Checks that never consult the oracle are unaffected.
    assert!(negated.check("perfect-complement").unwrap().passed);
    assert!(negated.check("threshold-characterization").unwrap().passed);
}

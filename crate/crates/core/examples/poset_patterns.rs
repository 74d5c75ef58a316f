//! Posets, order ideals, antichains and the X / N / diamond patterns.
//!
//!     cargo run --example poset_patterns

use stable_koszul::poset::{enumerate_posets, PatternKind, Poset};

fn report(name: &str, p: &Poset) {
    println!("{name}: {p:?}");
    for kind in PatternKind::ALL {
        match p.contains_pattern(kind) {
            Some(w) => println!("  contains {kind:<7} at {w:?}"),
            None => println!("  avoids   {kind}"),
        }
    }
    println!(
        "  tree (definition) {}, pattern-free {}",
        p.is_tree_by_definition(),
        p.is_tree_by_forbidden()
    );
}

fn main() -> stable_koszul::Result<()> {
    // a, b below both c and d: the orientation of C4.
    let q1 = Poset::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])?;
    // e < g > f < h: the N poset, an orientation of P4.
    let q2 = Poset::new(4, &[(0, 2), (1, 2), (1, 3)])?;
    let x = PatternKind::X.as_poset();
    // A rooted tree: root below three children, two of which branch on.
    let tree = Poset::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)])?;

    report("Q1", &q1);
    report("Q2", &q2);
    report("X", &x);
    report("tree", &tree);

    // N needs cover relations on its outer strokes: in X the candidate
    // b < d > e < f has b < c < d, so it is not an N.
    println!("\nX contains N: {}", x.contains_pattern(PatternKind::N).is_some());

    let ideals: Vec<String> = q2.ideals().iter().map(ToString::to_string).collect();
    let antichains: Vec<String> = q2.antichains().iter().map(ToString::to_string).collect();
    println!("\nQ2 ideals:     {}", ideals.join(" "));
    println!("Q2 antichains: {}", antichains.join(" "));

    println!("\nposets per size:");
    for n in 1..=6 {
        let all = enumerate_posets(n)?;
        let n_free = all.iter().filter(|p| p.contains_pattern(PatternKind::N).is_none()).count();
        println!("  {n}: {:>4} classes, {n_free:>4} N-free", all.len());
    }
    Ok(())
}

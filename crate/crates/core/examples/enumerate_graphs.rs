//! Isomorphism-free enumeration and canonical forms.
//!
//!     cargo run --example enumerate_graphs

use stable_koszul::canon::{are_isomorphic, canonical_graph, enumerate_graphs};
use stable_koszul::graph::Graph;

fn main() -> stable_koszul::Result<()> {
    println!(" n  all  connected");
    for n in 1..=6 {
        let all = enumerate_graphs(n, false)?.len();
        let connected = enumerate_graphs(n, true)?.len();
        println!("{n:>2} {all:>4} {connected:>10}");
    }

    println!("\nconnected graphs on 4 vertices:");
    for g in enumerate_graphs(4, true)? {
        println!("  {:<4} {} edges", g.to_graph6(), g.edge_count());
    }

    // P4 labelled two ways has one canonical representative.
    let a = Graph::path(4)?;
    let b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)])?;
    let (_, canon_a) = canonical_graph(&a)?;
    let (_, canon_b) = canonical_graph(&b)?;
    println!("\n{a} ~ {b}: {}, canonical {canon_a} / {canon_b}", are_isomorphic(&a, &b)?);
    Ok(())
}

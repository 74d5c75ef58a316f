//! The five invariants alpha, m, omega, theta, chi, plus stable sets and
//! maximal cliques.
//!
//!     cargo run --example graph_invariants

use stable_koszul::graph::Graph;
use stable_koszul::invariants::{is_chordal, maximal_cliques, stable_sets, InvariantBundle};

fn main() -> stable_koszul::Result<()> {
    let named = [
        ("K4", Graph::complete(4)?),
        ("C4", Graph::cycle(4)?),
        ("C5", Graph::cycle(5)?),
        ("P4", Graph::path(4)?),
        ("K1,3", Graph::star(3)?),
        ("K2,2,2", Graph::complete_multipartite(&[2, 2, 2])?),
    ];
    println!("{:<7} alpha  m omega theta chi chordal", "graph");
    for (name, g) in &named {
        let i = InvariantBundle::of(g);
        println!(
            "{name:<7} {:>5} {:>2} {:>5} {:>5} {:>3} {}",
            i.alpha,
            i.m,
            i.omega,
            i.theta,
            i.chi,
            is_chordal(g)
        );
    }

    let c4 = Graph::cycle(4)?;
    let stable: Vec<String> = stable_sets(&c4).iter().map(ToString::to_string).collect();
    let cliques: Vec<String> = maximal_cliques(&c4).iter().map(ToString::to_string).collect();
    println!("\nC4 stable sets:   {}", stable.join(" "));
    println!("C4 maximal cliques: {}", cliques.join(" "));
    Ok(())
}

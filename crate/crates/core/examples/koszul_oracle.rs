//! The strong-Koszulness oracle: verdicts, witnesses and their
//! independent re-verification.
//!
//!     cargo run --example koszul_oracle
//!     KOSZUL_DEGREE_BOUND=6 cargo run --example koszul_oracle

use stable_koszul::graph::Graph;
use stable_koszul::koszul::{colon_condition_direct, is_strongly_koszul, witness_is_valid};
use stable_koszul::poset::Poset;
use stable_koszul::toric::{hibi_ring, stable_set_ring, SemigroupRing, DEFAULT_DEGREE_BOUND};

fn show(name: &str, ring: &SemigroupRing, d: usize) -> stable_koszul::Result<()> {
    let verdict = is_strongly_koszul(ring, d)?;
    println!("{name:<12} {}", verdict.to_json_value(ring));
    if let Some(w) = &verdict.witness {
        println!("{:<12} witness re-verified: {}", "", witness_is_valid(ring, w));
    }
    Ok(())
}

fn main() -> stable_koszul::Result<()> {
    let d = std::env::var("KOSZUL_DEGREE_BOUND")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DEGREE_BOUND);

    for (name, g) in [
        ("k[Q_C4]", Graph::cycle(4)?),
        ("k[Q_P4]", Graph::path(4)?),
        ("k[Q_K1,3]", Graph::star(3)?),
        ("k[Q_K4]", Graph::complete(4)?),
    ] {
        show(name, &stable_set_ring(&g)?, d)?;
    }
    show("R[N]", &hibi_ring(&Poset::new(4, &[(0, 1), (2, 1), (2, 3)])?)?, d)?;
    show("R[chain4]", &hibi_ring(&Poset::chain(4)?)?, d)?;

    // The colon-ideal form of the definition, on one ordering.
    let c4 = stable_set_ring(&Graph::cycle(4)?)?;
    let witness = (0..c4.generator_count())
        .flat_map(|i| (0..c4.generator_count()).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .find_map(|(i, j)| colon_condition_direct(&c4, &[i, j], d).ok().flatten().map(|w| ((i, j), w)));
    if let Some(((i, j), w)) = witness {
        println!("\ncolon (u{i}) : u{j} in k[Q_C4] fails at {:?}", c4.coords(w.vector));
    }
    Ok(())
}

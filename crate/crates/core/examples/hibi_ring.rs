//! Hibi rings, their quadratic relations, and the matching with the
//! stable-set ring of the comparability graph.
//!
//!     cargo run --example hibi_ring

use stable_koszul::poset::Poset;
use stable_koszul::toric::{
    hibi_relations, hibi_ring, hilbert_series_prefix, relations_preserved, stable_set_ring,
    toric_relations_up_to, transfer_isomorphism, transfer_map,
};

fn main() -> stable_koszul::Result<()> {
    // Elements 0..4 stand for 1, 2, 3, 4 with 1 < 3, 2 < 3, 2 < 4.
    let p = Poset::new(4, &[(0, 2), (1, 2), (1, 3)])?;
    let ring = hibi_ring(&p)?;

    println!("generators (T, X1..X4) of the Hibi ring:");
    for e in ring.generator_table() {
        let label: Vec<String> = e.subset.iter().map(|k| format!("{}", k + 1)).collect();
        println!("  {:>2}  {:?}  ideal {{{}}}", e.index, e.vector, label.join(","));
    }

    println!("\nHibi relations X_I X_J = X_(I meet J) X_(I join J):");
    for r in hibi_relations(&p)? {
        println!("  {:?} = {:?}", r.left, r.right);
    }
    let toric = toric_relations_up_to(&ring, 3)?;
    let cubic = toric.iter().filter(|r| r.degree == 3).count();
    let essential_cubic = toric.iter().filter(|r| r.degree == 3 && r.essential).count();
    println!("degree-3 relations {cubic}, not implied by degree 2: {essential_cubic}");
    println!("Hilbert function d = 0..5: {:?}", hilbert_series_prefix(&ring, 5)?);

    let stable = stable_set_ring(&p.comparability_graph())?;
    println!("\nstable-set ring of G(P): Hilbert {:?}", hilbert_series_prefix(&stable, 5)?);
    let naive = transfer_map(&p)?;
    println!(
        "I -> max(I) map {naive:?} preserves relations: {}",
        relations_preserved(&ring, &stable, &naive, 3)?
    );
    match transfer_isomorphism(&p, 3)? {
        Some(map) => println!("relation-preserving generator bijection: {map:?}"),
        None => println!("no relation-preserving generator bijection"),
    }
    Ok(())
}

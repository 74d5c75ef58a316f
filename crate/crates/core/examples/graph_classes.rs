//! Class recognizers and transitive orientations.
//!
//!     cargo run --example graph_classes [graph6 ...]

use stable_koszul::classes::{
    find_induced_shape, is_almost_bipartite, is_bipartite, is_c4_p4_free, is_comparability,
    is_hl_comparability, is_perfect_desk, is_threshold_constructive,
    is_trivially_perfect_by_definition, transitive_orientations, FourVertexShape,
};
use stable_koszul::graph::Graph;

fn describe(g: &Graph) -> stable_koszul::Result<()> {
    println!("{g}");
    println!("  bipartite           {}", is_bipartite(g));
    println!("  almost bipartite    {}", is_almost_bipartite(g));
    println!("  perfect             {}", is_perfect_desk(g)?);
    println!("  threshold           {}", is_threshold_constructive(g));
    println!("  trivially perfect   {}", is_trivially_perfect_by_definition(g)?);
    println!("  C4/P4-free          {}", is_c4_p4_free(g));
    if let Some(quad) = find_induced_shape(g, &[FourVertexShape::C4, FourVertexShape::P4]) {
        println!("    obstruction on    {quad:?}");
    }
    println!("  comparability       {}", is_comparability(g)?);
    println!("  HL-comparability    {}", is_hl_comparability(g)?);
    Ok(())
}

fn main() -> stable_koszul::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if !args.is_empty() {
        for code in args {
            describe(&Graph::from_graph6(&code)?)?;
        }
        return Ok(());
    }

    for g in [
        Graph::cycle(4)?,
        Graph::path(4)?,
        Graph::star(3)?,
        Graph::complete_multipartite(&[2, 2, 2])?,
    ] {
        describe(&g)?;
    }

    let c4 = Graph::cycle(4)?;
    println!("\ntransitive orientations of C4:");
    for p in transitive_orientations(&c4)? {
        println!("  {p:?}");
    }
    Ok(())
}

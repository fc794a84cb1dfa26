//! The Grassmannian Gr(2,4) = A3/P_2 with Q the stabilizer of a line:
//! cycles are the planes through a fixed line, a P^2 of 2-planes.
//!
//!     cargo run --example grassmannian_cycles

use parhom::{
    chain_analysis, cycle_descriptor, dual_cycle_dim, generate_roots, tower_dims, ParabolicPair,
    Result, WeylLimit,
};

fn main() -> Result<()> {
    let pair = ParabolicPair::parse("A3", "2", "1")?;
    let cycle = cycle_descriptor(&pair);
    println!(
        "Q-cycle type {} marked at {{{}}}, dim {}",
        cycle.type_string, cycle.marking, cycle.dim
    );
    println!("P-cycle dim {}", dual_cycle_dim(&pair));

    let towers = tower_dims(&pair);
    let levels: Vec<usize> = (0..4).map(|j| towers.tower_dim_at(j)).collect();
    println!("tower dims for j = 0..3: {levels:?}");

    let rs = generate_roots(pair.diagram());
    let chains = chain_analysis(&pair, &rs, 16, WeylLimit::DEFAULT)?;
    println!("reachable Schubert dims by chain length: {:?}", chains.reachable_dims);
    println!("reachable Weyl set sizes: {:?}", chains.reachable_sizes);
    println!("minimal chain length N = {:?}", chains.minimal_n);
    Ok(())
}

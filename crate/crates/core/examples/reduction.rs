//! Reduction of Q mod P with its witnessing paths, checked against the
//! exhaustive search over subsets.
//!
//!     cargo run --example reduction -- E7 2 1,3,5,7

use parhom::{brute_force_reduction, cycle_descriptor, reduction, ParabolicPair, Result};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (t, p, q) = match args.as_slice() {
        [t, p, q] => (t.as_str(), p.as_str(), q.as_str()),
        _ => ("A4", "2", "1,3,4"),
    };
    let pair = ParabolicPair::parse(t, p, q)?;
    let r = reduction(&pair);
    println!("{t}: reduction of {{{q}}} mod {{{p}}} = {{{}}}", r.reduced_marking);
    for (node, path) in &r.forced_witnesses {
        println!("  node {node} forced by path {path:?}");
    }
    let dropped = pair.psi_q().difference(&r.reduced_marking);
    if !dropped.is_empty() {
        println!("  shielded: {{{dropped}}}");
    }
    println!("  exhaustive search agrees: {}", brute_force_reduction(&pair)? == r.reduced_marking);
    let before = cycle_descriptor(&pair);
    let after = cycle_descriptor(&pair.with_q(r.reduced_marking.clone()));
    println!("  cycle dim {} before, {} after reduction", before.dim, after.dim);
    Ok(())
}

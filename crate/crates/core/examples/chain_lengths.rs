//! Minimal chain length N for every pair of single-node markings of a type.
//!
//!     cargo run --release --example chain_lengths -- F4

use parhom::{chain_analysis, generate_roots, DynkinDiagram, Marking, ParabolicPair, Result, WeylLimit};

fn main() -> Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "F4".to_string());
    let d: DynkinDiagram = t.parse()?;
    let rs = generate_roots(&d);
    let n = d.rank();
    print!("{t:>6} |");
    for q in 1..=n {
        print!(" q={q:<2}");
    }
    println!();
    for p in 1..=n {
        print!("   p={p:<2}|");
        for q in 1..=n {
            let pair = ParabolicPair::new(d.clone(), Marking::from([p]), Marking::from([q]))?;
            let c = chain_analysis(&pair, &rs, 64, WeylLimit::from_env())?;
            match c.minimal_n {
                Some(k) => print!(" {k:<4}"),
                None => print!(" -   "),
            }
        }
        println!();
    }
    Ok(())
}

//! Root systems and Weyl groups: positive roots, highest roots, group orders
//! by enumeration, and the longest element.
//!
//!     cargo run --release --example weyl_groups

use parhom::{generate_roots, DynkinDiagram, Result, WeylLimit};

fn main() -> Result<()> {
    for t in ["A3", "B3", "C3", "D4", "G2", "F4", "E6"] {
        let d: DynkinDiagram = t.parse()?;
        let rs = generate_roots(&d);
        let w = rs.enumerate_weyl(&d.all_nodes(), WeylLimit::from_env())?;
        let w0 = rs.longest_element();
        println!(
            "{t:<3} |Φ+| = {:>3}  highest root {:?}  |W| = {:>6}  l(w0) = {:>3}  -w0 on nodes {:?}",
            rs.positive_count(),
            rs.highest_root(0).coords(),
            w.len(),
            w0.length(),
            rs.involution_via_w0(),
        );
    }

    // E7 is over the default guard; raise it with PARHOM_WEYL_LIMIT=3000000.
    let e7: DynkinDiagram = "E7".parse()?;
    let rs = generate_roots(&e7);
    match rs.enumerate_weyl(&e7.all_nodes(), WeylLimit::from_env()) {
        Ok(w) => println!("E7  |W| = {}", w.len()),
        Err(e) => println!("E7  skipped: {e}"),
    }
    Ok(())
}

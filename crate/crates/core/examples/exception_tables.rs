//! Sweeps marking pairs and lists those hitting the exception tables.
//!
//!     cargo run --example exception_tables

use parhom::report::{enumerate, EnumerateOptions};
use parhom::{DynkinDiagram, LargerAutomorphism, Result};

fn main() -> Result<()> {
    for t in ["B3", "B4", "C3", "C4", "F4", "G2"] {
        let d: DynkinDiagram = t.parse()?;
        for r in enumerate(&d, EnumerateOptions::default())? {
            let f = &r.flags;
            let single_p = r.input.psi_p.len() == 1;
            if f.mok_zhang_exception || f.degenerate_b_match {
                println!(
                    "{t} P={{{}}} Q={{{}}}: integral-variety exception{}",
                    r.input.psi_p,
                    r.input.psi_q,
                    if f.degenerate_b_match { " (degenerate index, not flagged)" } else { "" }
                );
            }
            if single_p && r.input.psi_q.len() == 1 && f.larger_automorphism_case != LargerAutomorphism::None {
                println!(
                    "{t} P={{{}}} Q={{{}}}: reduction of P is {{{}}} -> {:?}",
                    r.input.psi_p, r.input.psi_q, r.p_reduction, f.larger_automorphism_case
                );
            }
        }
    }
    Ok(())
}

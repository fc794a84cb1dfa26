//! Parse diagram strings and inspect Cartan matrices, the involution
//! `a -> -w0(a)` and paths in the diagram.
//!
//!     cargo run --example dynkin_diagrams -- E6 A2xG2

use parhom::{parse_diagram_spec, Result};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let types = if args.is_empty() {
        vec!["A3".to_string(), "D5".to_string(), "E6".to_string(), "A2xG2".to_string()]
    } else {
        args
    };
    for t in types {
        let d = parse_diagram_spec(&t)?;
        println!("{d}: {} nodes", d.rank());
        for e in d.edges() {
            let arrow = match e.multiplicity {
                1 => "-",
                2 => "=>",
                _ => "=>>",
            };
            println!("  {} {arrow} {}", e.source, e.target);
        }
        println!("  cartan matrix:");
        for row in d.cartan_matrix() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            println!("   {}", cells.join(""));
        }
        println!("  involution: {:?}", d.diagram_involution_table());
        let last = d.rank();
        match d.tree_path(1, last) {
            Some(path) => println!("  path 1 -> {last}: {path:?}"),
            None => println!("  nodes 1 and {last} lie in different factors"),
        }
    }
    Ok(())
}

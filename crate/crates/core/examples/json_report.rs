//! Builds a full report, prints it as text and as `parhom/1` JSON, and
//! checks the JSON round trip.
//!
//!     cargo run --example json_report -- C3 3 2

use parhom::report::{parse_json, render_json, render_text, AnalysisOptions, Analyzer};
use parhom::{Marking, Result};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (t, p, q) = match args.as_slice() {
        [t, p, q] => (t.as_str(), p.as_str(), q.as_str()),
        _ => ("C3", "3", "2"),
    };
    let options = AnalysisOptions {
        chain_length: true,
        ..Default::default()
    };
    let analyzer = Analyzer::new(t.parse()?, options)?;
    let report = analyzer.analyze(&Marking::parse(p)?, &Marking::parse(q)?)?;
    print!("{}", render_text(&report));
    let json = render_json(&report);
    println!("{json}");
    let back = parse_json(&json).expect("valid JSON");
    assert_eq!(render_json(&back), json);
    Ok(())
}

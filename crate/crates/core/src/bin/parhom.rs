//! Command-line front end: `parhom analyze` and `parhom enumerate`.
//!
//! Exit codes: 0 success, 2 input errors, 3 enumeration guard breach,
//! 4 internal consistency failure.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use parhom::report::{
    enumerate, render_json, render_text, render_tsv_row, AnalysisOptions, Analyzer,
    EnumerateOptions, TSV_HEADER,
};
use parhom::{DynkinDiagram, Error, Marking, WeylLimit};

#[derive(Parser)]
#[command(name = "parhom", version, about = "Cycle combinatorics of rational homogeneous spaces G/P")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one pair of markings.
    Analyze {
        /// Diagram string, e.g. A3 or A2xG2.
        #[arg(long = "type")]
        type_: String,
        /// Marking of P, e.g. 2 or 1,3 (empty string for none).
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        /// Marking of Q.
        #[arg(long = "q", allow_hyphen_values = true)]
        q: String,
        /// Run the Weyl-group chain search for the minimal chain length.
        #[arg(long)]
        chain_length: bool,
        #[arg(long, default_value_t = 32)]
        max_k: usize,
        #[arg(long)]
        json: bool,
        /// Overrides PARHOM_WEYL_LIMIT and the default of 10^6.
        #[arg(long)]
        weyl_limit: Option<u128>,
    },
    /// Analyse every pair (psi_p nonempty, psi_q arbitrary).
    Enumerate {
        #[arg(long = "type")]
        type_: String,
        /// Keep only pairs with Q not contained in P and Q != G.
        #[arg(long)]
        nontrivial_only: bool,
        #[arg(long)]
        with_chains: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long, default_value_t = 32)]
        max_k: usize,
        #[arg(long)]
        weyl_limit: Option<u128>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

fn limit(flag: Option<u128>) -> WeylLimit {
    flag.map(WeylLimit).unwrap_or_else(WeylLimit::from_env)
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Analyze {
            type_,
            p,
            q,
            chain_length,
            max_k,
            json,
            weyl_limit,
        } => {
            let diagram: DynkinDiagram = type_.parse()?;
            let psi_p = Marking::parse(&p)?;
            let psi_q = Marking::parse(&q)?;
            diagram.check_marking(&psi_p)?;
            diagram.check_marking(&psi_q)?;
            let options = AnalysisOptions {
                chain_length,
                max_k,
                weyl_limit: limit(weyl_limit),
            };
            let report = Analyzer::new(diagram, options)?.analyze(&psi_p, &psi_q)?;
            Ok(if json {
                render_json(&report) + "\n"
            } else {
                render_text(&report)
            })
        }
        Command::Enumerate {
            type_,
            nontrivial_only,
            with_chains,
            format,
            max_k,
            weyl_limit,
        } => {
            let diagram: DynkinDiagram = type_.parse()?;
            let options = EnumerateOptions {
                nontrivial_only,
                analysis: AnalysisOptions {
                    chain_length: with_chains,
                    max_k,
                    weyl_limit: limit(weyl_limit),
                },
            };
            let rows = enumerate(&diagram, options)?;
            let mut out = String::new();
            match format {
                Format::Tsv => {
                    out.push_str(TSV_HEADER);
                    out.push('\n');
                    for r in &rows {
                        out.push_str(&render_tsv_row(r));
                        out.push('\n');
                    }
                }
                Format::Json => {
                    for r in &rows {
                        out.push_str(&render_json(r));
                        out.push('\n');
                    }
                }
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let _ = io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::process::ExitCode;

use ckh2_cli::report::{self, AnalyzeOptions};
use ckh2_cli::{diagram, sweep, table};
use ckh2_core::{GlyphStyle, OmegaSequence};
use clap::{Parser, Subcommand};

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "ckh2", version, about = "Second cohomology of the Cayley-Klein algebras so_{w1..wN}(N+1)")]
struct Cli {
    /// Print Greek letters and subscript digits
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one algebra, e.g. `analyze 0,0,1`
    Analyze {
        #[arg(allow_hyphen_values = true)]
        omegas: String,
        #[arg(long)]
        json: bool,
        /// List the brackets of the extension by every nontrivial class
        #[arg(long)]
        brackets: bool,
        /// Show the classes surviving the compactness filter
        #[arg(long)]
        group_filter: bool,
        /// Keep omegas as symbols in the bracket listing
        #[arg(long)]
        symbolic: bool,
    },
    /// Check every standardized sequence of length N
    Sweep {
        n: usize,
        #[arg(long)]
        json: bool,
        /// Skip the brute-force check
        #[arg(long)]
        no_oracle: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Nontrivial classes grouped by zero pattern
    Table {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Triangular generator array with splits and extension links
    Diagram {
        #[arg(allow_hyphen_values = true)]
        omegas: String,
    },
}

fn parse(text: &str) -> Result<OmegaSequence, ExitCode> {
    text.parse().map_err(|e| {
        eprintln!("error: cannot read omega list {text:?}: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    let style = if cli.unicode { GlyphStyle::Unicode } else { GlyphStyle::Plain };
    let usage = |e: ckh2_core::Error| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    };
    match cli.command {
        Command::Analyze { omegas, json, brackets, group_filter, symbolic } => {
            let seq = parse(&omegas)?;
            let r = report::analyze(&seq, AnalyzeOptions { brackets, symbolic, style }).map_err(usage)?;
            if json {
                println!("{}", report::to_json(&r));
            } else {
                print!("{}", report::render_text(&r, group_filter));
            }
            Ok(if r.agree { ExitCode::SUCCESS } else { ExitCode::from(EXIT_DISAGREE) })
        }
        Command::Sweep { n, json, no_oracle, parallel } => {
            let s = sweep::run(n, !no_oracle, parallel).map_err(usage)?;
            if json {
                println!("{}", sweep::to_json(&s));
            } else {
                print!("{}", sweep::render_text(&s));
            }
            Ok(if s.all_agree() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_DISAGREE) })
        }
        Command::Table { n } => {
            let rows = table::build(n).map_err(usage)?;
            print!("{}", table::render(&rows, style));
            Ok(ExitCode::SUCCESS)
        }
        Command::Diagram { omegas } => {
            let seq = parse(&omegas)?;
            print!("{}", diagram::render(&seq, style).map_err(usage)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}

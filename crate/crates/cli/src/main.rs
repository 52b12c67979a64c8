//! `leibniz`: command-line front end for Leibniz-algebra computations.
//!
//! Exit codes: 0 on success or a passing check, 1 when a checked property
//! fails, 2 on usage, parse or I/O errors.

mod commands;
mod inputs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about = "Exact computations on finite-dimensional Leibniz algebras")]
pub struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Leibniz identity on all basis triples
    Check { file: PathBuf },
    /// Lower central, derived, or n-ary series of the algebra
    Series {
        file: PathBuf,
        /// lower_central, derived, n_lower or n_derived
        #[arg(long, default_value = "lower_central")]
        kind: String,
        /// Arity of the product (2 for the binary series)
        #[arg(long, default_value_t = 2)]
        ary: usize,
    },
    /// Nilpotency and nilindex
    Nilpotency { file: PathBuf },
    /// Solvability via the derived series
    Solvability { file: PathBuf },
    /// Basis of the space of Leibniz-derivations of a given order
    Derivations {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        order: usize,
        /// right or left nesting of the n-ary product
        #[arg(long, default_value = "right")]
        side: String,
    },
    /// Characteristic and strong nilpotency, invertible derivations by order
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
    /// Whether some Leibniz-derivation of the given order is invertible
    Invertible {
        file: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "right")]
        side: String,
    },
    /// Invertible derivation of order floor(s/2)+1 for a nilpotent algebra
    PropDerivation { file: PathBuf },
    /// Weight-space decomposition of a linear map on the algebra
    Decompose {
        file: PathBuf,
        /// JSON file {"rows": [[...], ...]} with the map in the standard basis
        #[arg(long)]
        map: PathBuf,
        /// Also check products of weight spaces, treating the map as a
        /// right Leibniz-derivation of this order
        #[arg(long)]
        order: Option<usize>,
    },
    /// Check the Leibniz n-algebra identity for an n-ary product
    IdentityN {
        file: PathBuf,
        #[arg(long)]
        ary: usize,
        /// right ([[x1,x2],x3]..) or left ([x1,[x2,..]]) nesting
        #[arg(long, default_value = "right")]
        product: String,
    },
    /// Invariance of an ideal under all Leibniz-derivations of an order
    Invariance {
        file: PathBuf,
        /// JSON file {"basis": [[...], ...]} spanning the ideal
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "right")]
        side: String,
    },
    /// Nilpotent iff an invertible right Leibniz-derivation exists
    TheoremCheck {
        file: PathBuf,
        /// Highest order scanned for non-nilpotent input [default: LEIBNIZ_MAX_ORDER or 4]
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Run the full verification suite on the corpus
    VerifyPaper {
        /// Corpus directory to verify instead of the bundled copy
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match commands::run(cli.command) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json output"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(err) => {
            if json {
                let v = serde_json::json!({ "error": err.message });
                println!("{}", serde_json::to_string_pretty(&v).expect("json output"));
            } else {
                eprintln!("error: {}", err.message);
            }
            ExitCode::from(err.code)
        }
    }
}

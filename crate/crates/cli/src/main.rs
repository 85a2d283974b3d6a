mod cache;
mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "modchar",
    version,
    about = "Characteristic classes of modular representations"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Cache results in this directory (MODCHAR_CACHE is used when absent).
    #[arg(long, env = "MODCHAR_CACHE", global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant monomials of H*(F_q) by degree.
    Basis {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        max_degree: u64,
    },
    /// χ_α(ρ_{F_q^n}) as a tensor class.
    Chi {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        /// Monomial such as "x y^3" or "x0 y1^2".
        #[arg(long)]
        alpha: String,
    },
    /// Nonzero universal classes and their degrees.
    Nonvanish {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        /// For r = 1, list every nonzero χ_{y^m}, χ_{x y^m} up to this degree instead.
        #[arg(long)]
        max_degree: Option<u64>,
    },
    /// Dickson-invariant identities for ρ_{F_p^n}.
    Dickson {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        /// Truncation degree (default 3(p^n − 1)).
        #[arg(long)]
        dmax: Option<u64>,
    },
    /// Carry-free tuples of multiples of p − 1.
    Tuples {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: u64,
    },
    /// Representation files.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Emit a representation file for a standard construction.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Run the cross-check suites.
    Verify {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
    },
}

#[derive(Subcommand, Debug)]
enum RepCommand {
    /// Filtration, classification and (r = 1) χ_{y^k} of a representation file.
    Analyze {
        file: PathBuf,
        /// Comma-separated k for χ_{y^k}.
        #[arg(long, value_delimiter = ',')]
        k: Vec<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConstructKind {
    Basic,
    Sym,
    Big,
    Regular,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ProfileArg {
    Quick,
    Full,
}

/// Why a command did not succeed, with its exit status.
#[derive(Debug)]
pub enum Failure {
    /// An internal identity or suite failed (exit 1); the output is still printed.
    Check(String),
    Usage(String),
    Input(String),
}

impl From<modchar::Error> for Failure {
    fn from(e: modchar::Error) -> Self {
        use modchar::Error as E;
        match e {
            E::IdentityFailure(_) => Failure::Check(e.to_string()),
            E::Parse { .. }
            | E::NotInvariant { .. }
            | E::InvalidMonomial(_)
            | E::InvalidElement(_)
            | E::InvalidModulus(_)
            | E::InvalidRep(_)
            | E::Input(_) => Failure::Input(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            if let Some(out) = out {
                print!("{out}");
            }
            let (code, msg) = match failure {
                Failure::Check(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::Input(m) => (3, m),
            };
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}

//! Command-line front end: parse semigroup definitions, dispatch invariant
//! computations, and emit deterministic text or JSON reports.
//!
//! Exit codes: 0 success, 2 malformed input, 3 semantic error (element not
//! in the semigroup, gcd ≠ 1, bad modulus), 4 resource limit exceeded.

mod output;
mod run;
mod spec;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "factorinv",
    about = "Factorization invariants of affine and numerical semigroups",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Semigroup definition file (JSON; see README for the schema)
    #[arg(long, global = true, value_name = "FILE")]
    pub semigroup: Option<std::path::PathBuf>,

    /// Inline generators: "10,17,24,31,43" or "(2,0),(0,2),(1,1)"
    #[arg(long, global = true, value_name = "LIST")]
    pub gens: Option<String>,

    /// Matrix rows "2,0,1,1;0,2,1,2" (kernel subcommands and
    /// equation-defined semigroups)
    #[arg(long, global = true, value_name = "ROWS")]
    pub matrix: Option<String>,

    /// Per-row moduli for congruence rows, 0 meaning a plain equation:
    /// "2,2" (with --matrix) or group moduli (with --elements)
    #[arg(long, global = true, value_name = "LIST")]
    pub moduli: Option<String>,

    /// Group elements for block monoids: "(0,1),(1,0),(1,1)"
    #[arg(long, global = true, value_name = "LIST")]
    pub elements: Option<String>,

    /// Element of the semigroup: "66" or "(2,4)"
    #[arg(long, global = true, value_name = "ELEMENT")]
    pub element: Option<String>,

    /// Catenary degree flavor
    #[arg(long, global = true, value_enum, default_value_t = Flavor::Plain)]
    pub flavor: Flavor,

    /// Scan bound for delta / maximal-denumerant scans
    #[arg(long, global = true, value_name = "N")]
    pub bound: Option<u64>,

    /// Known periodicity bound certifying that a delta scan is complete
    #[arg(long, global = true, value_name = "N")]
    pub periodicity_bound: Option<u64>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for candidate-set maxima (default: one per core)
    #[arg(long, global = true, value_name = "N")]
    pub parallel: Option<usize>,

    /// Cap on kernel completion steps; exceeding it exits with code 4
    #[arg(long, global = true, value_name = "N")]
    pub max_steps: Option<u64>,

    /// Include per-invariant wall-clock timings in the output (timings
    /// vary between runs; values never do)
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// All factorizations of --element
    Factorize,
    /// Set of factorization lengths of --element
    Lengths,
    /// Apéry set of --element (numerical; defaults to the multiplicity)
    Apery,
    /// Betti elements
    Betti,
    /// A minimal presentation
    Presentation,
    /// Primitive elements
    Primitive,
    /// Graver basis of --matrix or of the semigroup's generator matrix
    Graver,
    /// Hilbert basis of --matrix (with optional --moduli)
    Hilbert,
    /// Circuits of --matrix or of the semigroup's generator matrix
    Circuits,
    /// Elasticity of the semigroup, or of --element if given
    Elasticity,
    /// Delta sets: of --element, or the semigroup scan (needs --bound for
    /// numerical semigroups)
    Delta,
    /// Catenary degree (see --flavor), of --element if given
    Catenary,
    /// Tame degree
    Tame,
    /// ω-primality of the semigroup, or of --element if given
    Omega,
    /// Denumerant of --element, or the maximal denumerant scan without it
    Denumerant,
    /// Minimal zero-sum sequences of the block monoid (--moduli, --elements)
    Blockmonoid,
    /// Davenport constant of the block monoid (--moduli, --elements)
    Davenport,
    /// Full invariant battery
    Report,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Plain,
    Equal,
    Homogeneous,
    Monotone,
    Adjacent,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Input could not be parsed (exit 2) versus violated a semantic
/// constraint or resource cap (exit 3 / 4).
pub enum CliError {
    Malformed(String),
    Semantic(String),
    ResourceLimit(String),
}

impl From<factorinv::Error> for CliError {
    fn from(e: factorinv::Error) -> Self {
        match e {
            factorinv::Error::StepLimitExceeded => CliError::ResourceLimit(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.parallel {
        // ignore failure: the pool can only be initialized once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    factorinv::kernel::budget::set_step_limit(cli.max_steps);

    match run::run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::ResourceLimit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}

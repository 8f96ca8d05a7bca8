//! Command-line front end for the `priestley` library.
//!
//! Every command reads a [`PosetDocument`] (or nothing, for experiments) and
//! produces either a JSON [`RunReport`] or plain text (DOT, CSV). Exit codes:
//! 0 for a valid or positive result, 1 for an invalid or negative result or a
//! cap refusal, 2 for usage and parse errors.

pub mod commands;
pub mod document;
pub mod dot;
pub mod error;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use priestley::Limits;

pub use document::{Kind, PosetDocument};
pub use dot::DotTarget;
pub use error::CliError;
pub use report::RunReport;

#[derive(Debug, Parser)]
#[command(
    name = "priestley",
    version,
    about = "Finite posets, distributive lattices and the Φ construction"
)]
pub struct Cli {
    /// Largest poset built by products, Φ and down-set lattices.
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
    /// Largest poset whose order dimension is computed.
    #[arg(long, global = true)]
    pub max_dim_size: Option<usize>,
    /// Worker threads for the parallel scans (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Add wall-clock time to JSON reports. Makes them non-reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Validate a document; lattices are also checked for distributivity.
    Check { input: PathBuf },
    /// Build Φ(P) = {(a, b) : a <= b}.
    Phi {
        input: PathBuf,
        #[arg(long = "as", value_enum, default_value_t = Kind::Poset)]
        as_kind: Kind,
    },
    /// List the prime ideals of a lattice.
    Primes { input: PathBuf },
    /// The poset of prime ideals of a lattice.
    Spec { input: PathBuf },
    /// The lattice of down-sets of a poset.
    Downsets { input: PathBuf },
    /// Decide whether a lattice is Φ(K) for some K, with a witness.
    Image { input: PathBuf },
    /// Run one of the exhaustive experiment suites.
    Experiments {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Graphviz export.
    Dot {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DotTarget::Hasse)]
        target: DotTarget,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Corollary,
    Lemma51,
    Fixedpoints,
    Shift,
    Dimtable,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Corollary => "corollary",
            Suite::Lemma51 => "lemma51",
            Suite::Fixedpoints => "fixedpoints",
            Suite::Shift => "shift",
            Suite::Dimtable => "dimtable",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Corollary => 5,
            Suite::Lemma51 => 4,
            Suite::Fixedpoints => 6,
            Suite::Shift => 3,
            Suite::Dimtable => 5,
        }
    }
}

/// Rendered output and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(n) = self.max_size {
            limits.max_size = n;
        }
        if let Some(n) = self.max_dim_size {
            limits.max_dim_size = n;
        }
        limits
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let limits = cli.limits();
    let mut outcome = commands::dispatch(&cli.command, &limits)?;
    if let commands::Rendered::Report(report) = &mut outcome.0 {
        if cli.timing {
            report.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
    }
    let text = match outcome.0 {
        commands::Rendered::Report(report) => report.to_json(),
        commands::Rendered::Text(text) => text,
    };
    Ok(Outcome { text, code: outcome.1 })
}

//! Command-line front end for `lehmer-core`: per-field reports, the
//! non-Pólya table for `K_{5n}`, the integral-point search and the density
//! and `ω` sweeps, rendered as text, Markdown, CSV or JSON.

pub mod commands;
pub mod error;
pub mod format;
pub mod sweep;

use clap::{Parser, Subcommand};

pub use commands::{cmd_classify, cmd_curve, cmd_density, cmd_omega, cmd_table, Rendered};
pub use error::CliError;
pub use format::Format;

#[derive(Debug, Parser)]
#[command(name = "lehmer", version, about = "Polya groups of Lehmer quintic fields")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for the sweeps; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full invariant report for K_n.
    Classify {
        #[arg(allow_negative_numbers = true)]
        n: i128,
    },
    /// Table of K_5n for n in [from, to], n = 0 skipped.
    Table {
        #[arg(long, allow_negative_numbers = true, default_value_t = -60)]
        from: i128,
        #[arg(long, allow_negative_numbers = true, default_value_t = 60)]
        to: i128,
        /// Label rows by the field index n of K_n instead of the multiplier.
        #[arg(long)]
        raw: bool,
    },
    /// Integral points on y^2 = f(x) up to Masser's bound.
    Curve {
        /// Monic quartic as c4,c3,c2,c1,c0; defaults to x^4+5x^3+15x^2+25x+25.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Cube-free density of g(k) = m_5k / 25 against the Euler product.
    Density {
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
        #[arg(long, default_value_t = 100)]
        cutoff: u64,
    },
    /// omega(m_5p) over primes p.
    Omega {
        #[arg(long, default_value_t = 1_000)]
        limit: u64,
    },
}

/// Runs the parsed command on a pool of `cli.threads` workers.
pub fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::usage(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Classify { n } => cmd_classify(*n, cli.format),
        Command::Table { from, to, raw } => cmd_table(*from, *to, *raw, cli.format),
        Command::Curve { poly } => cmd_curve(poly.as_deref(), cli.format),
        Command::Density { limit, cutoff } => cmd_density(*limit, *cutoff, cli.format),
        Command::Omega { limit } => cmd_omega(*limit, cli.format),
    })
}

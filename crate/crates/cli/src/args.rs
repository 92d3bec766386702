use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const MAX_ORDER: usize = 24;

#[derive(Debug, Parser)]
#[command(name = "secant", version, about = "Exact secant-plane counts and tautological integrals on symmetric products of curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for sampling and grid sweeps (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// JSON-lines cache of universal polynomials.
    #[arg(long, global = true, env = "CACHE_PATH")]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Castelnuovo,
    Hpsi,
    Hphipsi0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Fast,
    Full,
}

#[derive(Debug, Args)]
pub struct Problem {
    #[arg(long)]
    pub e: i64,
    #[arg(long)]
    pub f: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count for a single (e, f, d, g).
    Compute {
        #[command(flatten)]
        problem: Problem,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        g: i64,
    },
    /// Counts over a grid of degrees and genera.
    Table {
        #[command(flatten)]
        problem: Problem,
        #[arg(long = "grid-d", value_parser = parse_range)]
        grid_d: RangeInclusive<i64>,
        #[arg(long = "grid-g", value_parser = parse_range)]
        grid_g: RangeInclusive<i64>,
    },
    /// Generating-function coefficients up to `--order`.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, default_value_t = 0)]
        g: i64,
        #[arg(long)]
        order: usize,
    },
    /// Universal polynomial in (d, g) of a monomial's integral.
    Universal {
        /// Product of c<i>, s<i>, ch<i> tokens with optional ^exponents, e.g. "c1*ch3".
        #[arg(long)]
        monomial: String,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
    },
}

/// `a..b`, inclusive at both ends.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Ok(4..=8));
        assert_eq!(parse_range("-2..-2"), Ok(-2..=-2));
        assert!(parse_range("5..4").is_err());
        assert!(parse_range("5").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

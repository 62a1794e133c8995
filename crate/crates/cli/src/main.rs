//! atlas: exact enumeration and verification of the component structure of
//! truncated-Hurwitz determinantal schemes.
//!
//! Exit codes: 0 on success, 1 on verification failure or table mismatch,
//! 2 on usage errors.

use anyhow::Result;
use atlas_cli::{dump, enumerate, output, series, verify};
use clap::{Parser, Subcommand};
use enumerate::{EnumOptions, VerificationLevel};
use output::Format;
use std::path::PathBuf;
use std::process::ExitCode;
use verify::Suite;

/// Hard cap on the node count: sizes beyond this are out of the supported
/// desk scale.
const I_CAP: usize = 7;

#[derive(Parser)]
#[command(name = "atlas", version, about = "Weighted-forest component atlas for truncated Hurwitz schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate components for a node count and diff against the tables.
    Enum {
        /// Total node count i (1..=7).
        #[arg(long)]
        i: usize,
        /// Restrict to one tree count j.
        #[arg(long)]
        j: Option<usize>,
        /// Render each record's series degree at this level.
        #[arg(long)]
        m: Option<usize>,
        /// Record budget; beyond it the output is truncated and marked.
        #[arg(long, default_value = "100000")]
        max_records: usize,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Seed controlling all sampling (verification levels beyond formulas).
        #[arg(long, default_value = "42")]
        seed: u64,
        /// How much to verify per record.
        #[arg(long, value_enum, default_value = "formulas")]
        level: VerificationLevel,
        /// Directory for cached enumeration results.
        #[arg(long, default_value = ".atlas-cache")]
        cache_dir: PathBuf,
        /// Disable the cache entirely.
        #[arg(long)]
        no_cache: bool,
    },
    /// Run a verification suite; nonzero exit on any failure.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Largest node count exercised by size-dependent suites.
        #[arg(long, default_value = "5")]
        i_max: usize,
        #[arg(long, default_value = "42")]
        seed: u64,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Show the level-m member of a component series.
    Series {
        /// Component label: table form (C515, C618a) or canonical i.j.k.
        #[arg(long)]
        label: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Dump canonical text forms of matrices and systems.
    Dump {
        /// One of: matrix, dsystem, hsystem, odd.
        object: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enum { i, j, m, max_records, format, seed, level, cache_dir, no_cache } => {
            if i > I_CAP {
                anyhow::bail!("node count {i} exceeds the configured cap of {I_CAP}");
            }
            let opts = EnumOptions {
                i,
                j,
                m,
                format,
                seed,
                level,
                cache_dir: Some(cache_dir),
                use_cache: !no_cache,
                max_records,
            };
            let (body, ok) = enumerate::run_enum(&opts)?;
            print!("{body}");
            Ok(ok)
        }
        Command::Verify { suite, i_max, seed, format } => {
            if i_max > I_CAP {
                anyhow::bail!("i-max {i_max} exceeds the configured cap of {I_CAP}");
            }
            let reports = verify::run_suite(suite, i_max, seed)?;
            let mut all_pass = true;
            for r in &reports {
                print!("{}", r.render(format));
                all_pass &= r.pass();
            }
            Ok(all_pass)
        }
        Command::Series { label, m, format } => {
            let (body, ok) = series::run_series(&label, m, format)?;
            print!("{body}");
            Ok(ok)
        }
        Command::Dump { object, m, n, alpha } => {
            let body = dump::run_dump(&object, m, n, alpha)?;
            print!("{body}");
            Ok(true)
        }
    }
}

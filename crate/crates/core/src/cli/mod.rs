//! The `tvf` command line: `eval`, `verify`, `relations`, `catalog`.
//!
//! Exit codes: 0 when everything checked passes, 1 when some check fails,
//! 2 for usage, parse and capacity errors.

mod commands;
mod config;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::genfunc::GenfuncError;
use crate::index::IndexError;
use crate::numeric::NumericError;
use crate::relations::RelationsError;

pub use commands::{verify_entry, VerifyOptions};
pub use config::{Config, Overrides, DEFAULT_SYMBOLIC_CAP};
pub use report::{write_reports, Format, Method, VerifyReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error("output: {0}")]
    Io(String),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Genfunc(#[from] GenfuncError),
    #[error(transparent)]
    Relations(#[from] RelationsError),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tvf",
    version,
    about = "Euler sums, multiple T-values and their sum formulas"
)]
pub struct Cli {
    /// `key = value` settings file (also `TVF_CONFIG`).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory for cached relation systems.
    #[arg(long = "cache", global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest weight a relation system may be built for.
    #[arg(long, global = true)]
    weight_cap: Option<u32>,
    /// Largest weight at which `verify --symbolic` looks for certificates.
    #[arg(long, global = true)]
    symbolic_cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an Euler sum (`2b,1`) or a multiple T-value (`T:2,1,1`).
    Eval(EvalArgs),
    /// Check catalog identities numerically and optionally against the relations.
    Verify(VerifyArgs),
    /// Rank of the relation system of one weight, optionally with a membership check.
    Relations(RelationsArgs),
    /// List the catalog.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    index: String,
    #[arg(long)]
    digits: Option<u32>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    name: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, conflicts_with = "weights")]
    weight: Option<u32>,
    /// Inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    weights: Option<(u32, u32)>,
    #[arg(long)]
    digits: Option<u32>,
    /// Also look for a relation-span certificate.
    #[arg(long)]
    symbolic: bool,
    /// Only entries of this family (with `--all`).
    #[arg(long)]
    section: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct RelationsArgs {
    #[arg(long)]
    weight: u32,
    /// Catalog identity to test for span membership.
    #[arg(long)]
    check: Option<String>,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    section: Option<String>,
}

fn parse_range(text: &str) -> Result<(u32, u32), String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {text:?}"))?;
    let a: u32 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad lower weight {a:?}"))?;
    let b: u32 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad upper weight {b:?}"))?;
    if a > b {
        return Err(format!("empty range {text}"));
    }
    Ok((a, b))
}

/// Runs the command line with explicit streams and environment.
pub fn run<I, T>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    env: &dyn Fn(&str) -> Option<String>,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    match dispatch(cli, out, err, env) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// [`run`] on the process arguments, stdout, stderr and environment.
pub fn main_exit() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(
        std::env::args_os(),
        &mut stdout.lock(),
        &mut stderr.lock(),
        &|k| std::env::var(k).ok(),
    );
    let _ = std::io::stdout().flush();
    code
}

fn dispatch(
    cli: Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
    env: &dyn Fn(&str) -> Option<String>,
) -> Result<i32, CliError> {
    let digits = match &cli.command {
        Command::Eval(a) => a.digits,
        Command::Verify(a) => a.digits,
        _ => None,
    };
    let flags = Overrides {
        digits,
        weight_cap: cli.weight_cap,
        symbolic_cap: cli.symbolic_cap,
        cache_dir: cli.cache_dir.clone(),
        threads: cli.threads,
    };
    let cfg = Config::resolve(cli.config.as_deref(), &flags, env)?;
    match cli.command {
        Command::Eval(a) => commands::eval(&cfg, &a.index, out),
        Command::Verify(a) => {
            let weights = match (a.weight, a.weights) {
                (Some(w), _) => Some((w, w)),
                (None, r) => r,
            };
            let opts = VerifyOptions {
                digits: cfg.digits,
                symbolic: a.symbolic,
                symbolic_cap: cfg.symbolic_cap,
                weight_cap: cfg.weight_cap,
                cache_dir: Some(cfg.cache_dir.clone()),
            };
            let sel = commands::Selection {
                name: a.name.as_deref(),
                section: a.section.as_deref(),
                weights,
            };
            commands::verify(&cfg, sel, &opts, a.format, out, err)
        }
        Command::Relations(a) => commands::relations(&cfg, a.weight, a.check.as_deref(), out),
        Command::Catalog(a) => commands::catalog(a.section.as_deref(), a.format, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..6"), Ok((4, 6)));
        assert!(parse_range("6..4").is_err());
        assert!(parse_range("4-6").is_err());
    }
}

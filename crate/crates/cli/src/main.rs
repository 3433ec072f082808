//! `plucker`: push-forwards and Plücker degrees of Grassmann bundles.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error.

mod config;
mod report;
mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{parse_rational, Command, ConfigError, JobConfig, RawBase, RawBundle, RawConfig, RawOptions, RawRational};
use run::{run, EXIT_CONFIG};

#[derive(Parser)]
#[command(name = "plucker", version, about = "Exact push-forward formulas for Grassmann bundles")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Plücker degree of G_X(d, E) with a per-k breakdown
    Degree(Common),
    /// Components of the push-forward of ch(det Q), one column per method
    ChernPushforward(Common),
    /// Agreement grid and identity suites
    Verify(Common),
    /// Factorial determinant, Cauchy expansion, and generalized Cauchy checks
    IdentityCheck(Common),
}

/// Flags mirror the config file; a flag overrides the file.
#[derive(Args, Debug, Default)]
struct Common {
    /// TOML job file with [base], [bundle] and [options] sections
    #[arg(long, short = 'c')]
    config: Option<PathBuf>,
    /// point, projective or formal
    #[arg(long)]
    base: Option<String>,
    /// Base dimension or truncation degree
    #[arg(long, short = 'n', allow_negative_numbers = true)]
    n: Option<i64>,
    /// Number of Segre families on the formal base
    #[arg(long, allow_negative_numbers = true)]
    families: Option<i64>,
    #[arg(long, short = 'r', allow_negative_numbers = true)]
    rank: Option<i64>,
    /// Comma-separated Chern roots, as multiples of h
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    roots: Option<Vec<i64>>,
    /// Comma-separated s_0..s_n, as rationals times h^i
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    segre: Option<Vec<String>>,
    /// Use the generic bundle on the formal base
    #[arg(long)]
    formal: bool,
    #[arg(long, allow_negative_numbers = true)]
    family: Option<i64>,
    #[arg(short = 'd', long = "d", allow_negative_numbers = true)]
    d: Option<i64>,
    /// proof (default) or displayed
    #[arg(long)]
    variant: Option<String>,
    /// text (default) or json
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    trials: Option<i64>,
    /// closed, schur, constant-term, flag-oracle or all
    #[arg(long)]
    method: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    max_rank: Option<i64>,
    /// normalized (default) or literal
    #[arg(long)]
    cauchy_form: Option<String>,
    /// Truncation weight of the Cauchy expansion check
    #[arg(long, allow_negative_numbers = true)]
    weight: Option<i64>,
}

impl Common {
    fn to_raw(&self) -> Result<RawConfig, ConfigError> {
        let segre = match &self.segre {
            None => None,
            Some(v) => Some(
                v.iter()
                    .map(|s| parse_rational(s, "bundle.segre").map(|_| RawRational::Text(s.clone())))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        Ok(RawConfig {
            command: None,
            d: self.d,
            base: RawBase {
                kind: self.base.clone(),
                n: self.n,
                families: self.families,
            },
            bundle: RawBundle {
                rank: self.rank,
                chern_roots: self.roots.clone(),
                segre,
                formal: self.formal.then_some(true),
                family: self.family,
            },
            options: RawOptions {
                variant: self.variant.clone(),
                format: self.format.clone(),
                seed: self.seed,
                trials: self.trials,
                method: self.method.clone(),
                max_rank: self.max_rank,
                cauchy_form: self.cauchy_form.clone(),
                weight: self.weight,
            },
        })
    }
}

fn job_from(command: Command, common: &Common) -> Result<JobConfig, ConfigError> {
    let file = match &common.config {
        Some(path) => RawConfig::from_file(path)?,
        None => RawConfig::default(),
    };
    JobConfig::validate(command, file.overlay(common.to_raw()?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match &cli.command {
        Sub::Degree(c) => (Command::Degree, c),
        Sub::ChernPushforward(c) => (Command::ChernPushforward, c),
        Sub::Verify(c) => (Command::Verify, c),
        Sub::IdentityCheck(c) => (Command::IdentityCheck, c),
    };
    let outcome = job_from(command, common)
        .map_err(run::RunError::from)
        .and_then(|job| run(&job));
    match outcome {
        Ok(o) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(o.output.as_bytes());
            ExitCode::from(o.exit)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}

//! Command-line harness for the verification suites.
//!
//! One subcommand per suite plus `all`; reports go to stdout or `--out` as
//! JSON or one PASS/FAIL line per check. The exit code is 0 exactly when
//! every check passed.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use weilrep::report::{emit, Format, Report};
use weilrep::suites::{
    default_truncation, run_all, suite_finite_indices, suite_fourier, suite_hecke,
    suite_minimal_type, suite_weil, SuiteConfig,
};

#[derive(Parser)]
#[command(
    name = "weilrep",
    about = "Exact verification suites for the dyadic Weil representation, its minimal type, and the associated affine Hecke algebra",
    version
)]
struct Cli {
    #[command(subcommand)]
    suite: Suite,

    /// Rank of the symplectic group.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,

    /// Truncation depth for the fixed-space computation (defaults to 2 at
    /// rank 1, else 1).
    #[arg(long, global = true)]
    trunc: Option<i64>,

    /// Maximum word length in the Hecke enumeration checks.
    #[arg(long, global = true, default_value_t = 6)]
    max_len: usize,

    /// Seed of the deterministic sample generator.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Suite {
    /// Fourier transform identities.
    Fourier {
        /// Inject a deliberately failing check to exercise the failure path.
        #[arg(long)]
        self_test: bool,
    },
    /// Intertwining, Steinberg relations, and the metaplectic defect.
    Weil,
    /// Stabilizer table, character values, and the fixed space.
    MinimalType,
    /// Hecke algebra relations and the type-B presentation transport.
    Hecke,
    /// Orders and indices of the finite groups over F_2.
    FiniteIndices,
    /// Run every suite.
    All,
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    if cli.n == 0 || cli.n > 3 {
        bail!("rank must be between 1 and 3");
    }
    let mut cfg = SuiteConfig::new(cli.n);
    cfg.trunc = cli.trunc.unwrap_or_else(|| default_truncation(cli.n));
    if cfg.trunc < 1 {
        bail!("truncation depth must be at least 1");
    }
    if cli.max_len == 0 {
        bail!("maximum word length must be at least 1");
    }
    cfg.max_len = cli.max_len;
    cfg.seed = cli.seed;

    let format: Format = cli
        .format
        .parse()
        .map_err(|e: String| anyhow::anyhow!(e))?;

    let reports: Vec<Report> = match cli.suite {
        Suite::Fourier { self_test } => {
            cfg.self_test = self_test;
            vec![suite_fourier(&cfg)]
        }
        Suite::Weil => vec![suite_weil(&cfg)],
        Suite::MinimalType => vec![suite_minimal_type(&cfg)?],
        Suite::Hecke => vec![suite_hecke(&cfg)],
        Suite::FiniteIndices => vec![suite_finite_indices(&cfg)],
        Suite::All => run_all(&cfg)?,
    };

    let all_passed = emit(&reports, cli.out.as_deref(), format).context("writing the report")?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

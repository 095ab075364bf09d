//! Subcommand definitions, dispatch, and shared output plumbing.
//!
//! Exit code contract: 0 on success, 1 when outputs violate the library's
//! published invariants (a contract failure), 2 on usage or IO errors.
//! Argument parse errors exit 2 through clap itself.

pub mod dirac;
pub mod ensemble;
pub mod lightcone;
pub mod maxwell;
pub mod verify_algebra;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "relwave",
    version,
    about = "Relativistic plane waves, matrix algebra checks, and defect ensembles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the gamma and spin matrix identities, writing a JSON report
    VerifyAlgebra(verify_algebra::Args),
    /// Solve a Dirac plane wave and write its residual diagnostics
    Dirac(dirac::Args),
    /// Run the seeded defect ensemble, writing regions and a histogram
    Ensemble(ensemble::Args),
    /// Write hyperboloid slices, cone edges, and boosted-cone deviations
    Lightcone(lightcone::Args),
    /// Solve a transverse plane wave and write its residual columns
    Maxwell(maxwell::Args),
}

/// How a successfully parsed run ended.
pub enum Outcome {
    Pass,
    /// Outputs were written but violate a published invariant.
    ContractFailure(String),
}

pub enum CliError {
    Usage(String),
    Io { path: PathBuf, source: std::io::Error },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => {
                write!(f, "cannot write {}: {source}", path.display())
            }
        }
    }
}

pub fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::VerifyAlgebra(args) => verify_algebra::run(&args),
        Command::Dirac(args) => dirac::run(&args),
        Command::Ensemble(args) => ensemble::run(&args),
        Command::Lightcone(args) => lightcone::run(&args),
        Command::Maxwell(args) => maxwell::run(&args),
    }
}

/// Creates the output directory if needed.
pub fn prepare_out_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })
}

pub fn write_file(dir: &Path, name: &str, content: &str) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, content).map_err(|source| CliError::Io { path, source })
}

/// Parses a comma-separated list of numbers, as in `--times 0,1,2`.
pub fn parse_f64_list(flag: &str, raw: &str) -> Result<Vec<f64>, CliError> {
    raw.split(',')
        .map(|token| {
            token.parse::<f64>().map_err(|_| {
                CliError::Usage(format!("{flag}: cannot parse '{token}' as a number"))
            })
        })
        .collect()
}

/// Exactly three comma-separated components, as in `--momentum 0,0,4`.
pub fn three_components(flag: &str, raw: &str) -> Result<[f64; 3], CliError> {
    let values = parse_f64_list(flag, raw)?;
    if values.len() != 3 {
        return Err(CliError::Usage(format!(
            "{flag} takes exactly three comma-separated components, got {}",
            values.len()
        )));
    }
    if !values.iter().all(|v| v.is_finite()) {
        return Err(CliError::Usage(format!("{flag} components must be finite")));
    }
    Ok([values[0], values[1], values[2]])
}

/// Times must be finite and strictly ascending so rows come out ordered.
pub fn validate_times(times: &[f64]) -> Result<(), CliError> {
    if times.is_empty() {
        return Err(CliError::Usage("--times requires at least one value".into()));
    }
    if !times.iter().all(|t| t.is_finite()) {
        return Err(CliError::Usage("--times values must be finite".into()));
    }
    for pair in times.windows(2) {
        // Negated so a NaN pair is rejected rather than accepted.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(pair[1] > pair[0]) {
            return Err(CliError::Usage(
                "--times values must be strictly ascending".into(),
            ));
        }
    }
    Ok(())
}

/// Canonical string for a flag list, reusable in manifests.
pub fn join_f64s(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| crate::numfmt::fmt_f64(v))
        .collect::<Vec<_>>()
        .join(",")
}

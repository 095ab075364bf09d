//! `verify-algebra`: evaluates every matrix identity the library promises
//! exactly and writes `report.json`. All entries are Gaussian integers, so
//! the pass criterion is deviation == 0, not a tolerance.

use std::path::PathBuf;

use serde::Serialize;

use relwave::clifford::{
    anticommutator, big_gamma, commutator, gamma, spin_matrix, MetricSignature,
};
use relwave::matrix::ComplexMatrix;
use relwave::Complex64;

use crate::commands::{prepare_out_dir, write_file, CliError, Outcome};
use crate::manifest::RunManifest;

#[derive(clap::Args)]
pub struct Args {
    /// Directory for report.json and manifest.json
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Serialize)]
struct IdentityEntry {
    name: String,
    max_deviation: f64,
    pass: bool,
}

#[derive(Serialize)]
struct Report {
    version: String,
    identities: Vec<IdentityEntry>,
    all_pass: bool,
}

fn entry(name: String, lhs: &ComplexMatrix, rhs: &ComplexMatrix) -> IdentityEntry {
    let max_deviation = lhs.max_abs_diff(rhs);
    IdentityEntry {
        name,
        max_deviation,
        pass: max_deviation == 0.0,
    }
}

fn epsilon(i: usize, j: usize, k: usize) -> f64 {
    let (i, j, k) = (i as i64, j as i64, k as i64);
    ((j - i) * (k - j) * (k - i)) as f64 / 2.0
}

fn collect_identities() -> Vec<IdentityEntry> {
    let mut identities = Vec::new();
    for mu in 0..4 {
        for nu in 0..4 {
            let lhs = anticommutator(&gamma(mu), &gamma(nu)).expect("same dimension");
            let rhs = if mu == nu {
                ComplexMatrix::identity(4)
                    .scale(Complex64::new(2.0 * MetricSignature::DIAG[mu], 0.0))
            } else {
                ComplexMatrix::zeros(4)
            };
            identities.push(entry(
                format!("anticommutator_gamma{mu}_gamma{nu}"),
                &lhs,
                &rhs,
            ));
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let lhs = commutator(&spin_matrix(i), &spin_matrix(j)).expect("same dimension");
            let mut rhs = ComplexMatrix::zeros(3);
            for k in 0..3 {
                let sign = epsilon(i, j, k);
                if sign != 0.0 {
                    rhs = &rhs + &spin_matrix(k).scale(Complex64::new(0.0, sign));
                }
            }
            identities.push(entry(format!("commutator_spin{i}_spin{j}"), &lhs, &rhs));
        }
    }
    identities.push(entry(
        "hermiticity_gamma0".to_owned(),
        &gamma(0).adjoint(),
        &gamma(0),
    ));
    for mu in 1..4 {
        identities.push(entry(
            format!("antihermiticity_gamma{mu}"),
            &gamma(mu).adjoint(),
            &gamma(mu).scale(Complex64::new(-1.0, 0.0)),
        ));
    }
    for axis in 0..3 {
        identities.push(entry(
            format!("hermiticity_spin{axis}"),
            &spin_matrix(axis).adjoint(),
            &spin_matrix(axis),
        ));
    }
    for axis in 0..3 {
        let s = spin_matrix(axis);
        identities.push(entry(format!("spin{axis}_cubed"), &(&(&s * &s) * &s), &s));
    }
    let g0 = big_gamma(0);
    identities.push(entry(
        "big_gamma0_squared_identity".to_owned(),
        &(&g0 * &g0),
        &ComplexMatrix::identity(6),
    ));
    identities
}

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    prepare_out_dir(&args.out)?;
    let identities = collect_identities();
    let all_pass = identities.iter().all(|e| e.pass);
    let failed = identities.iter().filter(|e| !e.pass).count();
    let total = identities.len();
    let report = Report {
        version: env!("CARGO_PKG_VERSION").to_owned(),
        identities,
        all_pass,
    };
    let mut body = serde_json::to_string_pretty(&report).expect("report serialization");
    body.push('\n');
    write_file(&args.out, "report.json", &body)?;
    RunManifest::new("verify-algebra", 0, &args.out).write(&args.out)?;
    if all_pass {
        println!("verify-algebra: {total} identities hold exactly");
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::ContractFailure(format!(
            "{failed} of {total} identities deviate from zero"
        )))
    }
}

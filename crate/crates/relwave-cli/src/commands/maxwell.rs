//! `maxwell`: solves the transverse plane wave for the requested wave
//! vector and writes `maxwell.csv`, one row per seeded spacetime probe,
//! with the residuals of the first-order pair form, the real curl form,
//! and the six-component block form. Exits 1 if any residual exceeds the
//! scaled tolerance.

use std::path::PathBuf;

use relwave::dirac::probe_points;
use relwave::maxwell::RSPlaneWave;
use relwave::RESIDUAL_TOL;

use crate::commands::{join_f64s, prepare_out_dir, three_components, write_file, CliError, Outcome};
use crate::manifest::RunManifest;
use crate::numfmt::fmt_f64;

#[derive(clap::Args)]
pub struct Args {
    /// Wave vector as three comma-separated components, |k| > 0
    #[arg(long, allow_hyphen_values = true)]
    pub k: String,
    /// Number of spacetime probe points
    #[arg(long, default_value_t = 20)]
    pub probe_count: usize,
    /// Seed for the probe stream
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for maxwell.csv and manifest.json
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    let k = three_components("--k", &args.k)?;
    if args.probe_count == 0 {
        return Err(CliError::Usage("--probe-count must be at least 1".into()));
    }
    let wave = RSPlaneWave::from_wave_vector(&k)
        .map_err(|e| CliError::Usage(format!("invalid wave vector: {e}")))?;
    let omega = wave.omega();

    let mut csv =
        String::from("kx,ky,kz,omega,residual_majorana,residual_curl,residual_gamma\n");
    let mut worst = 0.0f64;
    for probe in probe_points(args.seed, args.probe_count, 5.0) {
        let t = probe.t();
        let x = probe.spatial();
        let majorana = wave.majorana_residual(&x, t);
        let curl = wave.curl_form_residual(&x, t);
        let gamma = wave
            .big_gamma_form_residual(&x, t)
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        worst = worst.max(majorana).max(curl).max(gamma);
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            fmt_f64(k[0]),
            fmt_f64(k[1]),
            fmt_f64(k[2]),
            fmt_f64(omega),
            fmt_f64(majorana),
            fmt_f64(curl),
            fmt_f64(gamma)
        ));
    }

    prepare_out_dir(&args.out)?;
    write_file(&args.out, "maxwell.csv", &csv)?;
    RunManifest::new("maxwell", args.seed, &args.out)
        .param("k", join_f64s(&k))
        .param("probe_count", args.probe_count.to_string())
        .param("seed", args.seed.to_string())
        .write(&args.out)?;

    if worst <= RESIDUAL_TOL * omega.max(1.0) {
        println!(
            "maxwell: omega {}, worst residual {}",
            fmt_f64(omega),
            fmt_f64(worst)
        );
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::ContractFailure(format!(
            "wave residual {worst} exceeds tolerance"
        )))
    }
}

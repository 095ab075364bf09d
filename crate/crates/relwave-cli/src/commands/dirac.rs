//! `dirac`: builds the on-shell plane wave for the requested mass,
//! three-momentum, and spin branch, then writes `dirac.csv` with one
//! quantity per row: energy, residuals over a seeded probe set,
//! wavelengths per axis, and the worst whole-wavelength translation
//! deviation. Exits 1 if any residual exceeds its scaled tolerance.

use std::path::PathBuf;

use clap::ValueEnum;

use relwave::dirac::{
    mass_shell_residual, mass_shell_scale, probe_points, translation_invariance_check_with_probes,
    wavelength_identity_residual, wavelength_identity_scale, wavelengths_from_momentum,
    OnShellState, SpinBranch, DEFAULT_PROBE_COUNT, DEFAULT_PROBE_SEED, PROBE_HALF_WIDTH,
};
use relwave::RESIDUAL_TOL;

use crate::commands::{join_f64s, prepare_out_dir, three_components, write_file, CliError, Outcome};
use crate::manifest::RunManifest;
use crate::numfmt::fmt_f64;

#[derive(Clone, Copy, ValueEnum)]
pub enum BranchArg {
    Up,
    Down,
}

impl BranchArg {
    fn to_branch(self) -> SpinBranch {
        match self {
            BranchArg::Up => SpinBranch::Up,
            BranchArg::Down => SpinBranch::Down,
        }
    }

    fn name(self) -> &'static str {
        match self {
            BranchArg::Up => "up",
            BranchArg::Down => "down",
        }
    }
}

#[derive(clap::Args)]
pub struct Args {
    /// Rest mass (must be non-negative)
    #[arg(long, allow_negative_numbers = true)]
    pub mass: f64,
    /// Spatial momentum as three comma-separated components
    #[arg(long, allow_hyphen_values = true)]
    pub momentum: String,
    /// Spin branch of the amplitude
    #[arg(long, value_enum, default_value = "up")]
    pub branch: BranchArg,
    /// Number of spacetime probe points
    #[arg(long, default_value_t = DEFAULT_PROBE_COUNT)]
    pub probe_count: usize,
    /// Seed for the probe stream (shifts reuse seed + 1)
    #[arg(long, default_value_t = DEFAULT_PROBE_SEED)]
    pub seed: u64,
    /// Directory for dirac.csv and manifest.json
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

/// 20 integer shift vectors with components in [-10, 10], axes with zero
/// momentum forced to zero so the shift stays finite.
fn shift_vectors(seed: u64, momentum: &[f64; 4]) -> Vec<[i64; 4]> {
    // Reuse the deterministic coordinate stream and quantize it, so shifts
    // need no second RNG implementation.
    probe_points(seed.wrapping_add(1), 20, 10.0)
        .into_iter()
        .map(|v| {
            let mut n = [0i64; 4];
            for mu in 0..4 {
                if momentum[mu] != 0.0 {
                    n[mu] = v.0[mu].round() as i64;
                }
            }
            n
        })
        .collect()
}

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    let momentum = three_components("--momentum", &args.momentum)?;
    if args.probe_count == 0 {
        return Err(CliError::Usage("--probe-count must be at least 1".into()));
    }
    let state = OnShellState::from_three_momentum(args.mass, momentum, args.branch.to_branch())
        .map_err(|e| CliError::Usage(format!("invalid wave parameters: {e}")))?;

    let probes = probe_points(args.seed, args.probe_count, PROBE_HALF_WIDTH);
    let energy = state.momentum().t();
    let shell_residual = mass_shell_residual(state.momentum(), state.mass());
    let mut residual_max = 0.0f64;
    let mut phase_deviation = 0.0f64;
    for x in &probes {
        residual_max = residual_max.max(state.dirac_residual(x).max_abs());
        phase_deviation = phase_deviation.max((state.phase(x).norm() - 1.0).abs());
    }
    let identity_residual = wavelength_identity_residual(state.momentum(), state.mass());
    let wavelengths = wavelengths_from_momentum(state.momentum());
    let mut translation_max = 0.0f64;
    for n in shift_vectors(args.seed, &state.momentum().0) {
        let deviation = translation_invariance_check_with_probes(&state, n, &probes)
            .expect("zero-momentum axes are skipped by construction");
        translation_max = translation_max.max(deviation);
    }

    let mut csv = String::from("quantity,value\n");
    csv.push_str(&format!("energy,{}\n", fmt_f64(energy)));
    csv.push_str(&format!("mass_shell_residual,{}\n", fmt_f64(shell_residual)));
    csv.push_str(&format!("dirac_residual_max,{}\n", fmt_f64(residual_max)));
    csv.push_str(&format!(
        "phase_magnitude_deviation,{}\n",
        fmt_f64(phase_deviation)
    ));
    let lambda_names = ["lambda_t", "lambda_x", "lambda_y", "lambda_z"];
    match &wavelengths {
        Ok(lambda) => {
            for (name, value) in lambda_names.iter().zip(lambda.0) {
                csv.push_str(&format!("{name},{}\n", fmt_f64(value)));
            }
        }
        Err(_) => {
            // Some momentum component vanishes: that axis has no finite
            // wavelength, the others are still reported.
            for (mu, name) in lambda_names.iter().enumerate() {
                let p = state.momentum().0[mu];
                let value = if p == 0.0 {
                    f64::INFINITY
                } else {
                    core::f64::consts::TAU / p
                };
                csv.push_str(&format!("{name},{}\n", fmt_f64(value)));
            }
        }
    }
    csv.push_str(&format!(
        "wavelength_identity_residual,{}\n",
        fmt_f64(identity_residual)
    ));
    csv.push_str(&format!(
        "translation_deviation_max,{}\n",
        fmt_f64(translation_max)
    ));

    prepare_out_dir(&args.out)?;
    write_file(&args.out, "dirac.csv", &csv)?;
    RunManifest::new("dirac", args.seed, &args.out)
        .param("mass", fmt_f64(args.mass))
        .param("momentum", join_f64s(&momentum))
        .param("branch", args.branch.name())
        .param("probe_count", args.probe_count.to_string())
        .param("seed", args.seed.to_string())
        .write(&args.out)?;

    let energy_scale = energy.abs().max(1.0);
    let mut violations = Vec::new();
    if shell_residual > RESIDUAL_TOL * mass_shell_scale(state.momentum(), state.mass()) {
        violations.push(format!("mass shell residual {shell_residual}"));
    }
    if residual_max > RESIDUAL_TOL * energy_scale {
        violations.push(format!("wave equation residual {residual_max}"));
    }
    if phase_deviation > RESIDUAL_TOL {
        violations.push(format!("phase magnitude deviation {phase_deviation}"));
    }
    if identity_residual > RESIDUAL_TOL * wavelength_identity_scale(state.momentum(), state.mass())
    {
        violations.push(format!("wavelength identity residual {identity_residual}"));
    }
    if translation_max > RESIDUAL_TOL {
        violations.push(format!("translation deviation {translation_max}"));
    }
    if violations.is_empty() {
        println!("dirac: energy {}, all residuals within tolerance", fmt_f64(energy));
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::ContractFailure(violations.join("; ")))
    }
}

//! `ensemble`: runs the seeded equal-perimeter defect ensemble and writes
//! `regions.csv` (one envelope row per time, ascending) plus
//! `histogram.csv` (edge-position distribution at the last requested
//! time). Exits 1 if the published region invariants fail to hold on the
//! generated data.

use std::path::PathBuf;

use relwave::ensemble::{
    occupation_histogram, run_ensemble, EnsembleConfig, DEFAULT_A_MIN_FRACTION,
};

use crate::commands::{
    join_f64s, parse_f64_list, prepare_out_dir, validate_times, write_file, CliError, Outcome,
};
use crate::manifest::RunManifest;
use crate::numfmt::fmt_f64;

#[derive(clap::Args)]
pub struct Args {
    /// Shared perimeter of every sampled defect
    #[arg(long, allow_negative_numbers = true)]
    pub perimeter: f64,
    /// Number of Monte Carlo samples
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Lower sampling bound as a fraction of the largest semi-axis
    #[arg(long, default_value_t = DEFAULT_A_MIN_FRACTION, allow_negative_numbers = true)]
    pub a_min_fraction: f64,
    /// Strictly ascending non-negative times, comma separated
    #[arg(long, allow_hyphen_values = true)]
    pub times: String,
    /// Number of histogram bins
    #[arg(long, default_value_t = 20)]
    pub bins: usize,
    /// Seed for the sampling stream
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for regions.csv, histogram.csv, and manifest.json
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    let times = parse_f64_list("--times", &args.times)?;
    validate_times(&times)?;
    let cfg = EnsembleConfig {
        perimeter: args.perimeter,
        sample_count: args.samples,
        a_min_fraction: args.a_min_fraction,
        seed: args.seed,
        times,
    };
    cfg.validate()
        .map_err(|e| CliError::Usage(format!("invalid ensemble parameters: {e}")))?;
    if args.bins == 0 {
        return Err(CliError::Usage("--bins must be at least 1".into()));
    }

    let regions = run_ensemble(&cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    let last_time = *cfg.times.last().expect("times validated non-empty");
    let histogram = occupation_histogram(&cfg, last_time, args.bins)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let mut regions_csv = String::from("t,x_lo,x_hi\n");
    for r in &regions {
        regions_csv.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(r.t),
            fmt_f64(r.x_lo),
            fmt_f64(r.x_hi)
        ));
    }
    let mut histogram_csv = String::from("bin_center,count\n");
    for (center, count) in &histogram {
        histogram_csv.push_str(&format!("{},{count}\n", fmt_f64(*center)));
    }

    prepare_out_dir(&args.out)?;
    write_file(&args.out, "regions.csv", &regions_csv)?;
    write_file(&args.out, "histogram.csv", &histogram_csv)?;
    RunManifest::new("ensemble", args.seed, &args.out)
        .param("perimeter", fmt_f64(args.perimeter))
        .param("samples", args.samples.to_string())
        .param("a_min_fraction", fmt_f64(args.a_min_fraction))
        .param("times", join_f64s(&cfg.times))
        .param("bins", args.bins.to_string())
        .param("seed", args.seed.to_string())
        .write(&args.out)?;

    let mut violations = Vec::new();
    for r in &regions {
        if r.sample_positions.iter().any(|&x| x < r.x_lo || x > r.x_hi) {
            violations.push(format!("sample outside envelope at t = {}", r.t));
        }
    }
    for pair in regions.windows(2) {
        if !(pair[1].x_hi > pair[0].x_hi && pair[1].x_lo > pair[0].x_lo) {
            violations.push(format!(
                "regions fail to grow from t = {} to t = {}",
                pair[0].t, pair[1].t
            ));
        }
    }
    let total: u64 = histogram.iter().map(|(_, n)| n).sum();
    if total != args.samples as u64 {
        violations.push(format!("histogram total {total} != sample count"));
    }
    if violations.is_empty() {
        println!(
            "ensemble: {} samples over {} times, envelope and histogram consistent",
            args.samples,
            regions.len()
        );
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::ContractFailure(violations.join("; ")))
    }
}

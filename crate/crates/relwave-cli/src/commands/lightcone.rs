//! `lightcone`: writes three tables over the requested times. `slices.csv`
//! holds the hyperboloid slice radius for the given semi-axes, `cone.csv`
//! the degenerate light-cone edge pair, and `boost.csv` the cone's right
//! edge after the boost together with its deviation from unit speed. The
//! boost expressions are symmetric under swapping x and t, so the cone
//! deviation is exactly zero; anything above 1e-12 exits 1.

use std::path::PathBuf;

use relwave::lightcone::{boost_point, cone_position, slice_radius, BoostParameter};
use relwave::RESIDUAL_TOL;

use crate::commands::{
    join_f64s, parse_f64_list, prepare_out_dir, validate_times, write_file, CliError, Outcome,
};
use crate::manifest::RunManifest;
use crate::numfmt::fmt_f64;

#[derive(clap::Args)]
pub struct Args {
    /// Throat half-width of the hyperboloid slice
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Time scale of the hyperboloid slice
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Boost velocity, |v| < 1
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub v: f64,
    /// Strictly ascending times, comma separated
    #[arg(long, allow_hyphen_values = true)]
    pub times: String,
    /// Directory for slices.csv, cone.csv, boost.csv, and manifest.json
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    let times = parse_f64_list("--times", &args.times)?;
    validate_times(&times)?;
    let boost = BoostParameter::new(args.v)
        .map_err(|e| CliError::Usage(format!("invalid boost: {e}")))?;
    // Validate the semi-axes once up front.
    slice_radius(args.a, args.b, 0.0)
        .map_err(|e| CliError::Usage(format!("invalid slice parameters: {e}")))?;

    let mut slices_csv = String::from("t,radius\n");
    let mut cone_csv = String::from("t,x_plus,x_minus\n");
    let mut boost_csv = String::from("t,x_prime,t_prime,speed_deviation\n");
    let mut worst_deviation = 0.0f64;
    for &t in &times {
        let radius = slice_radius(args.a, args.b, t).expect("parameters validated above");
        slices_csv.push_str(&format!("{},{}\n", fmt_f64(t), fmt_f64(radius)));

        let (x_plus, x_minus) = cone_position(t);
        cone_csv.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(t),
            fmt_f64(x_plus),
            fmt_f64(x_minus)
        ));

        let (x_prime, t_prime) = boost_point(x_plus, t, boost);
        // The boosted origin has no defined speed; it trivially stays on
        // the cone.
        let deviation = if t_prime == 0.0 {
            0.0
        } else {
            ((x_prime / t_prime).abs() - 1.0).abs()
        };
        worst_deviation = worst_deviation.max(deviation);
        boost_csv.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f64(t),
            fmt_f64(x_prime),
            fmt_f64(t_prime),
            fmt_f64(deviation)
        ));
    }

    prepare_out_dir(&args.out)?;
    write_file(&args.out, "slices.csv", &slices_csv)?;
    write_file(&args.out, "cone.csv", &cone_csv)?;
    write_file(&args.out, "boost.csv", &boost_csv)?;
    RunManifest::new("lightcone", 0, &args.out)
        .param("a", fmt_f64(args.a))
        .param("b", fmt_f64(args.b))
        .param("v", fmt_f64(args.v))
        .param("times", join_f64s(&times))
        .write(&args.out)?;

    if worst_deviation <= RESIDUAL_TOL {
        println!(
            "lightcone: {} times, worst cone speed deviation {}",
            times.len(),
            fmt_f64(worst_deviation)
        );
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::ContractFailure(format!(
            "boosted cone speed deviates by {worst_deviation}"
        )))
    }
}

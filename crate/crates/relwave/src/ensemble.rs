//! Seeded Monte Carlo ensemble of equal-perimeter elliptic defects.
//!
//! Every defect is an ellipse whose semi-axes (a, b) are tied together by
//! the perimeter approximation P ~= pi (1.5 (a + b) - sqrt(a b)), accurate
//! to about a percent for aspect ratios between 0.2 and 5. Fixing the
//! perimeter caps the major semi-axis at a_max = P / (1.5 pi), where the
//! ellipse degenerates to a segment. At time t the defect's right edge sits
//! at x = a sqrt(1 + t^2/b^2), so sampling a uniformly yields a band of
//! hyperbolic trajectories whose envelope is set by the interval endpoints.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::lightcone::slice_radius;
use crate::sampling;

/// Default lower sampling bound, as a fraction of `a_max`.
pub const DEFAULT_A_MIN_FRACTION: f64 = 0.01;

/// Relative pullback of the upper sampling endpoint from `a_max`, keeping
/// sampled defects away from the degenerate b = 0 boundary.
const ENDPOINT_CLAMP: f64 = 1e-9;

/// Relative width of the boundary band around `a_max` treated as the
/// degenerate case by [`solve_b`].
const BOUNDARY_BAND: f64 = 1e-12;

/// Largest major semi-axis compatible with `perimeter`: a_max = P/(1.5 pi).
pub fn a_max(perimeter: f64) -> f64 {
    perimeter / (1.5 * PI)
}

/// Perimeter approximation pi (1.5 (a + b) - sqrt(a b)). Both semi-axes
/// must be positive.
pub fn perimeter_of(a: f64, b: f64) -> Result<f64, EnsembleError> {
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(EnsembleError::NonPositiveSemiAxis { a, b });
    }
    Ok(PI * (1.5 * (a + b) - (a * b).sqrt()))
}

/// Solves the perimeter constraint for b given a.
///
/// Substituting s = sqrt(b) turns the constraint into the quadratic
/// 1.5 s^2 - sqrt(a) s + (1.5 a - P/pi) = 0. Strictly inside (0, a_max)
/// exactly one root is positive -- the branch continuous with the circle
/// a = b = P/(2 pi) -- and that root is returned. Within rounding distance
/// of a_max the vanishing root is returned instead: the ellipse degenerates
/// to a segment, so b is essentially zero there. Beyond a_max there is no
/// solution.
pub fn solve_b(a: f64, perimeter: f64) -> Result<f64, EnsembleError> {
    if !(perimeter > 0.0) || !perimeter.is_finite() {
        return Err(EnsembleError::NonPositivePerimeter { perimeter });
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(EnsembleError::NonPositiveSemiAxis { a, b: f64::NAN });
    }
    let cap = a_max(perimeter);
    if a > cap * (1.0 + BOUNDARY_BAND) {
        return Err(EnsembleError::NoSolution { a, a_max: cap });
    }
    // Discriminant of the quadratic in s; equals 6 P/pi - 8 a, which stays
    // above a_max itself on the whole valid domain.
    let disc = 6.0 * perimeter / PI - 8.0 * a;
    let sqrt_disc = disc.sqrt();
    let sqrt_a = a.sqrt();
    let s = if a >= cap * (1.0 - BOUNDARY_BAND) {
        ((sqrt_a - sqrt_disc) / 3.0).max(0.0)
    } else {
        (sqrt_a + sqrt_disc) / 3.0
    };
    Ok(s * s)
}

/// An ellipse with semi-axes (a, b) and the perimeter that ties them
/// together. Both semi-axes are strictly positive by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipseDefect {
    a: f64,
    b: f64,
    perimeter: f64,
}

impl EllipseDefect {
    /// Builds a defect from explicit semi-axes, deriving the perimeter.
    pub fn from_semiaxes(a: f64, b: f64) -> Result<Self, EnsembleError> {
        let perimeter = perimeter_of(a, b)?;
        Ok(EllipseDefect { a, b, perimeter })
    }

    /// Builds a defect with the given perimeter, solving for b. Errors at
    /// the degenerate a = a_max boundary where b vanishes.
    pub fn with_perimeter(a: f64, perimeter: f64) -> Result<Self, EnsembleError> {
        let b = solve_b(a, perimeter)?;
        if b <= 0.0 {
            return Err(EnsembleError::DegenerateDefect { a });
        }
        debug_assert!(
            (PI * (1.5 * (a + b) - (a * b).sqrt()) - perimeter).abs() <= 1e-9 * perimeter,
            "solved semi-axis violates the perimeter constraint"
        );
        Ok(EllipseDefect { a, b, perimeter })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    /// Right-edge coordinate a sqrt(1 + (t/b)^2) at time t. Delegates to
    /// the light-cone slice formula so the two stay exactly consistent.
    pub fn position_at(&self, t: f64) -> f64 {
        slice_radius(self.a, self.b, t).expect("semi-axes validated at construction")
    }
}

/// Parameters of an ensemble run. `times` must be strictly ascending and
/// non-negative; `a_min_fraction` sets the lower sampling bound as a
/// fraction of `a_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleConfig {
    pub perimeter: f64,
    pub sample_count: usize,
    pub a_min_fraction: f64,
    pub seed: u64,
    pub times: Vec<f64>,
}

impl EnsembleConfig {
    /// Config with the default lower sampling bound.
    pub fn new(perimeter: f64, sample_count: usize, seed: u64, times: Vec<f64>) -> Self {
        EnsembleConfig {
            perimeter,
            sample_count,
            a_min_fraction: DEFAULT_A_MIN_FRACTION,
            seed,
            times,
        }
    }

    pub fn validate(&self) -> Result<(), EnsembleError> {
        if !(self.perimeter > 0.0) || !self.perimeter.is_finite() {
            return Err(EnsembleError::NonPositivePerimeter {
                perimeter: self.perimeter,
            });
        }
        if self.sample_count == 0 {
            return Err(EnsembleError::EmptyEnsemble);
        }
        if !(self.a_min_fraction > 0.0) || !(self.a_min_fraction < 1.0) {
            return Err(EnsembleError::FractionOutOfRange {
                fraction: self.a_min_fraction,
            });
        }
        if self.times.is_empty() {
            return Err(EnsembleError::NoTimes);
        }
        for pair in self.times.windows(2) {
            if !(pair[1] > pair[0]) {
                return Err(EnsembleError::TimesNotAscending);
            }
        }
        if !self.times.iter().all(|t| t.is_finite()) || self.times[0] < 0.0 {
            return Err(EnsembleError::NegativeTime { t: self.times[0] });
        }
        Ok(())
    }

    /// The sampled semi-axis interval [a_min_fraction * a_max,
    /// a_max (1 - 1e-9)]; the upper endpoint is pulled back from a_max to
    /// keep every sampled defect non-degenerate.
    pub fn a_interval(&self) -> (f64, f64) {
        let cap = a_max(self.perimeter);
        (self.a_min_fraction * cap, cap * (1.0 - ENDPOINT_CLAMP))
    }

    /// The seeded uniform draws of the major semi-axis, one per sample, in
    /// a fixed index order. Sample i always consumes draw i, so the
    /// config's seed pins the whole ensemble regardless of how positions
    /// are later evaluated.
    fn sample_semiaxes(&self) -> Vec<f64> {
        let (a_lo, a_hi) = self.a_interval();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.sample_count)
            .map(|_| sampling::uniform(&mut rng, a_lo, a_hi))
            .collect()
    }
}

/// The band occupied by the ensemble at one time: the analytic envelope
/// [x_lo, x_hi] swept by the semi-axis interval endpoints, plus every
/// sampled edge position.
#[derive(Clone, Debug, PartialEq)]
pub struct OccupationRegion {
    pub t: f64,
    pub x_lo: f64,
    pub x_hi: f64,
    pub sample_positions: Vec<f64>,
}

fn sampled_defects(cfg: &EnsembleConfig) -> Result<Vec<EllipseDefect>, EnsembleError> {
    cfg.validate()?;
    cfg.sample_semiaxes()
        .into_iter()
        .map(|a| EllipseDefect::with_perimeter(a, cfg.perimeter))
        .collect()
}

fn envelope_defects(cfg: &EnsembleConfig) -> Result<(EllipseDefect, EllipseDefect), EnsembleError> {
    let (a_lo, a_hi) = cfg.a_interval();
    Ok((
        EllipseDefect::with_perimeter(a_lo, cfg.perimeter)?,
        EllipseDefect::with_perimeter(a_hi, cfg.perimeter)?,
    ))
}

/// Runs the ensemble: one region per configured time, each holding every
/// sampled edge position and the analytic interval-endpoint envelope.
/// Identical configs produce bit-identical results.
pub fn run_ensemble(cfg: &EnsembleConfig) -> Result<Vec<OccupationRegion>, EnsembleError> {
    let defects = sampled_defects(cfg)?;
    let (lo, hi) = envelope_defects(cfg)?;
    Ok(cfg
        .times
        .iter()
        .map(|&t| OccupationRegion {
            t,
            x_lo: lo.position_at(t),
            x_hi: hi.position_at(t),
            sample_positions: defects.iter().map(|d| d.position_at(t)).collect(),
        })
        .collect())
}

/// Histogram of sampled edge positions at time t: `bins` equal-width bins
/// spanning the analytic envelope, returned as (bin center, count) pairs.
/// Uses the same seeded draws as [`run_ensemble`], so counts always total
/// `sample_count`.
pub fn occupation_histogram(
    cfg: &EnsembleConfig,
    t: f64,
    bins: usize,
) -> Result<Vec<(f64, u64)>, EnsembleError> {
    if bins == 0 {
        return Err(EnsembleError::ZeroBins);
    }
    if !t.is_finite() || t < 0.0 {
        return Err(EnsembleError::NegativeTime { t });
    }
    let defects = sampled_defects(cfg)?;
    let (lo, hi) = envelope_defects(cfg)?;
    let x_lo = lo.position_at(t);
    let x_hi = hi.position_at(t);
    let width = (x_hi - x_lo) / bins as f64;
    let mut counts = alloc::vec![0u64; bins];
    for d in &defects {
        let offset = (d.position_at(t) - x_lo) / width;
        let idx = (offset.floor().max(0.0) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, n)| (x_lo + (i as f64 + 0.5) * width, n))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EnsembleError {
    NonPositiveSemiAxis { a: f64, b: f64 },
    NonPositivePerimeter { perimeter: f64 },
    /// No positive b satisfies the constraint: a exceeds a_max.
    NoSolution { a: f64, a_max: f64 },
    /// b vanished at the a = a_max boundary.
    DegenerateDefect { a: f64 },
    EmptyEnsemble,
    FractionOutOfRange { fraction: f64 },
    NoTimes,
    TimesNotAscending,
    NegativeTime { t: f64 },
    ZeroBins,
}

impl fmt::Display for EnsembleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnsembleError::NonPositiveSemiAxis { a, b } => {
                write!(f, "semi-axes must be positive, got a = {a}, b = {b}")
            }
            EnsembleError::NonPositivePerimeter { perimeter } => {
                write!(f, "perimeter must be positive, got {perimeter}")
            }
            EnsembleError::NoSolution { a, a_max } => {
                write!(f, "no ellipse with a = {a} fits the perimeter (a_max = {a_max})")
            }
            EnsembleError::DegenerateDefect { a } => {
                write!(f, "defect degenerates to a segment at a = {a}")
            }
            EnsembleError::EmptyEnsemble => write!(f, "sample count must be at least 1"),
            EnsembleError::FractionOutOfRange { fraction } => {
                write!(f, "a_min_fraction must lie in (0, 1), got {fraction}")
            }
            EnsembleError::NoTimes => write!(f, "at least one time is required"),
            EnsembleError::TimesNotAscending => write!(f, "times must be strictly ascending"),
            EnsembleError::NegativeTime { t } => {
                write!(f, "times must be finite and non-negative, got {t}")
            }
            EnsembleError::ZeroBins => write!(f, "bin count must be at least 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EnsembleError {}

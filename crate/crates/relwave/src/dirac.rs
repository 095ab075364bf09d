//! Positive-energy plane-wave solutions of the free Dirac equation.
//!
//! A state is psi(x) = u exp(-i p.x) with p on the mass shell
//! p.p = m^2 and the bispinor amplitude u solving (gamma^mu p_mu - m) u = 0.
//! Each momentum component defines a wavelength lambda_mu = 2 pi / p_mu, and
//! shifting any coordinate by an integer number of its wavelengths leaves
//! psi unchanged -- the continuous phase carries an exact discrete
//! translation symmetry. Reflections through a coordinate axis act by a
//! gamma matrix on the amplitude and map solutions to solutions.

use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;

use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::clifford::gamma;
use crate::fourvec::FourVector;
use crate::matrix::ComplexMatrix;
use crate::sampling;
use crate::RESIDUAL_TOL;

/// Seed of the default probe-point sampler.
pub const DEFAULT_PROBE_SEED: u64 = 42;
/// Size of the default probe set.
pub const DEFAULT_PROBE_COUNT: usize = 100;
/// Probe coordinates are drawn uniformly from [-5, 5) on every axis.
pub const PROBE_HALF_WIDTH: f64 = 5.0;

/// Spin orientation label of the upper two-component block in the rest
/// frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinBranch {
    Up,
    Down,
}

/// Four-component complex amplitude.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bispinor(pub [Complex64; 4]);

impl Bispinor {
    /// Squared Euclidean norm u^dagger u.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Hermitian inner product a^dagger b.
    pub fn dagger_dot(&self, other: &Bispinor) -> Complex64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.conj() * b)
            .fold(Complex64::new(0.0, 0.0), |acc, t| acc + t)
    }

    /// Largest component magnitude.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// A positive-energy on-shell plane wave.
///
/// Constructed states satisfy p.p = m^2 within the scaled residual
/// tolerance and carry a unit-norm amplitude solving the momentum-space
/// wave equation. [`OnShellState::reflect`] can produce states whose energy
/// component is negative; they still solve the wave equation but cannot be
/// rebuilt through [`OnShellState::new`].
#[derive(Clone, Debug, PartialEq)]
pub struct OnShellState {
    momentum: FourVector,
    mass: f64,
    amplitude: Bispinor,
    branch: SpinBranch,
}

/// p.p - m^2; zero on the mass shell.
pub fn mass_shell_residual(momentum: &FourVector, mass: f64) -> f64 {
    momentum.minkowski_dot(momentum) - mass * mass
}

/// Scale factor for mass-shell comparisons: the residual is a difference of
/// squared magnitudes, so the tolerance grows with them.
pub fn mass_shell_scale(momentum: &FourVector, mass: f64) -> f64 {
    let sq: f64 = momentum.0.iter().map(|c| c * c).sum();
    (sq + mass * mass).max(1.0)
}

/// Solves (gamma^mu p_mu - m) u = 0 for the unit-norm amplitude of the
/// requested spin branch.
///
/// The momentum must be on shell with positive energy. The two branches are
/// mutually orthogonal, and in the rest frame they reduce to the first two
/// basis bispinors.
pub fn solve_bispinor(
    momentum: &FourVector,
    mass: f64,
    branch: SpinBranch,
) -> Result<Bispinor, DiracError> {
    if !momentum.is_finite() || !mass.is_finite() {
        return Err(DiracError::NonFiniteInput);
    }
    if mass < 0.0 {
        return Err(DiracError::NegativeMass { mass });
    }
    let energy = momentum.t();
    if energy <= 0.0 {
        return Err(DiracError::NonPositiveEnergy { energy });
    }
    let residual = mass_shell_residual(momentum, mass);
    if residual.abs() > RESIDUAL_TOL * mass_shell_scale(momentum, mass) {
        return Err(DiracError::OffShell { residual });
    }

    let [px, py, pz] = momentum.spatial();
    let denom = energy + mass;
    let norm = 1.0 / (1.0 + momentum.spatial_norm_sqr() / (denom * denom)).sqrt();
    let c = |re: f64, im: f64| Complex64::new(re * norm, im * norm);
    // Lower block is (sigma.p) chi / (E + m) for the rest-frame spinor chi.
    let components = match branch {
        SpinBranch::Up => [
            c(1.0, 0.0),
            c(0.0, 0.0),
            c(pz / denom, 0.0),
            c(px / denom, py / denom),
        ],
        SpinBranch::Down => [
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(px / denom, -py / denom),
            c(-pz / denom, 0.0),
        ],
    };
    Ok(Bispinor(components))
}

/// The contraction gamma^mu p_mu (signature applied to the spatial terms).
pub fn momentum_slash(momentum: &FourVector) -> ComplexMatrix {
    let mut m = gamma(0).scale(Complex64::new(momentum.0[0], 0.0));
    for k in 1..4 {
        m = &m - &gamma(k).scale(Complex64::new(momentum.0[k], 0.0));
    }
    m
}

impl OnShellState {
    /// Builds a positive-energy state from an explicit four-momentum.
    pub fn new(
        momentum: FourVector,
        mass: f64,
        branch: SpinBranch,
    ) -> Result<Self, DiracError> {
        let amplitude = solve_bispinor(&momentum, mass, branch)?;
        Ok(OnShellState {
            momentum,
            mass,
            amplitude,
            branch,
        })
    }

    /// Builds a state from mass and 3-momentum, computing the on-shell
    /// energy sqrt(m^2 + |p|^2) internally.
    pub fn from_three_momentum(
        mass: f64,
        p: [f64; 3],
        branch: SpinBranch,
    ) -> Result<Self, DiracError> {
        if !mass.is_finite() || !p.iter().all(|c| c.is_finite()) {
            return Err(DiracError::NonFiniteInput);
        }
        if mass < 0.0 {
            return Err(DiracError::NegativeMass { mass });
        }
        let energy = (mass * mass + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        Self::new(FourVector::new(energy, p[0], p[1], p[2]), mass, branch)
    }

    pub fn momentum(&self) -> &FourVector {
        &self.momentum
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn amplitude(&self) -> &Bispinor {
        &self.amplitude
    }

    pub fn branch(&self) -> SpinBranch {
        self.branch
    }

    /// Plane-wave factor exp(-i p.x); unit magnitude for any real x.
    pub fn phase(&self, x: &FourVector) -> Complex64 {
        Complex64::from_polar(1.0, -self.momentum.minkowski_dot(x))
    }

    /// psi(x) = u exp(-i p.x).
    pub fn evaluate(&self, x: &FourVector) -> Bispinor {
        let ph = self.phase(x);
        Bispinor(self.amplitude.0.map(|c| c * ph))
    }

    /// Pointwise defect of the wave equation,
    /// (i gamma^mu d_mu - m) psi(x), evaluated analytically. All components
    /// vanish (to rounding) for a valid state, independent of x.
    pub fn dirac_residual(&self, x: &FourVector) -> Bispinor {
        let slashed = momentum_slash(&self.momentum).mul_vec(&self.amplitude.0);
        let ph = self.phase(x);
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (slashed[i] - self.amplitude.0[i] * self.mass) * ph;
        }
        Bispinor(out)
    }

    /// Reflection through coordinate axis `mu`: every momentum component
    /// except p_mu flips sign and the amplitude is multiplied by
    /// gamma(mu). The result solves the wave equation with the reflected
    /// momentum; for spatial `mu` its energy component is negative.
    /// Panics if `mu > 3`.
    pub fn reflect(&self, mu: usize) -> OnShellState {
        assert!(mu <= 3, "reflection axis must be 0..=3, got {mu}");
        let mut p = self.momentum;
        for nu in 0..4 {
            if nu != mu {
                p.0[nu] = -p.0[nu];
            }
        }
        let reflected = gamma(mu).mul_vec(&self.amplitude.0);
        OnShellState {
            momentum: p,
            mass: self.mass,
            amplitude: Bispinor([reflected[0], reflected[1], reflected[2], reflected[3]]),
            branch: self.branch,
        }
    }
}

/// Componentwise wavelengths lambda_mu = 2 pi / p_mu.
///
/// Any vanishing momentum component has an infinite wavelength; this is
/// reported as an error carrying the offending axes rather than an infinity
/// in the result.
pub fn wavelengths_from_momentum(momentum: &FourVector) -> Result<FourVector, DiracError> {
    let axes = momentum.0.map(|c| c == 0.0);
    if axes.iter().any(|&z| z) {
        return Err(DiracError::InfiniteWavelength { axes });
    }
    Ok(FourVector(momentum.0.map(|p| TAU / p)))
}

/// Inverse of [`wavelengths_from_momentum`]: p_mu = 2 pi / lambda_mu.
pub fn momentum_from_wavelengths(wavelengths: &FourVector) -> Result<FourVector, DiracError> {
    let axes = wavelengths.0.map(|c| c == 0.0);
    if axes.iter().any(|&z| z) {
        return Err(DiracError::ZeroWavelength { axes });
    }
    Ok(FourVector(wavelengths.0.map(|l| TAU / l)))
}

/// Residual of the inverse-square wavelength identity
/// lambda_0^{-2} - lambda_1^{-2} - lambda_2^{-2} - lambda_3^{-2} = (m/2pi)^2,
/// computed from inverse wavelengths lambda_mu^{-1} = p_mu / 2 pi so that
/// vanishing momentum components (infinite wavelengths) contribute nothing.
pub fn wavelength_identity_residual(momentum: &FourVector, mass: f64) -> f64 {
    let mut acc = 0.0;
    for mu in 0..4 {
        let inv = momentum.0[mu] / TAU;
        acc += crate::clifford::MetricSignature::component(mu) * inv * inv;
    }
    acc - (mass / TAU) * (mass / TAU)
}

/// Largest term entering the identity above, for scaling its tolerance.
pub fn wavelength_identity_scale(momentum: &FourVector, mass: f64) -> f64 {
    let mut scale: f64 = (mass / TAU) * (mass / TAU);
    for &p in &momentum.0 {
        scale = scale.max((p / TAU) * (p / TAU));
    }
    scale.max(1.0)
}

/// `count` spacetime probe points with every coordinate uniform in
/// [-half_width, half_width), drawn from a seeded deterministic stream.
pub fn probe_points(seed: u64, count: usize, half_width: f64) -> Vec<FourVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut coords = [0.0; 4];
            for c in coords.iter_mut() {
                *c = sampling::uniform(&mut rng, -half_width, half_width);
            }
            FourVector(coords)
        })
        .collect()
}

/// The shared default probe set (seed 42, 100 points in [-5, 5)^4).
pub fn default_probe_points() -> Vec<FourVector> {
    probe_points(DEFAULT_PROBE_SEED, DEFAULT_PROBE_COUNT, PROBE_HALF_WIDTH)
}

/// Largest |psi(x + shift) - psi(x)| over the default probe set, where
/// shift_mu = n_mu lambda_mu.
///
/// Axes with n_mu = 0 are skipped, so vanishing momentum components are
/// fine there; a nonzero n_mu on a vanishing momentum component is an
/// infinite-wavelength error.
pub fn translation_invariance_check(
    state: &OnShellState,
    n: [i64; 4],
) -> Result<f64, DiracError> {
    translation_invariance_check_with_probes(state, n, &default_probe_points())
}

/// Same as [`translation_invariance_check`] with an explicit probe set.
pub fn translation_invariance_check_with_probes(
    state: &OnShellState,
    n: [i64; 4],
    probes: &[FourVector],
) -> Result<f64, DiracError> {
    let mut shift = [0.0; 4];
    let mut bad = [false; 4];
    for mu in 0..4 {
        if n[mu] == 0 {
            continue;
        }
        let p = state.momentum().0[mu];
        if p == 0.0 {
            bad[mu] = true;
        } else {
            shift[mu] = n[mu] as f64 * (TAU / p);
        }
    }
    if bad.iter().any(|&z| z) {
        return Err(DiracError::InfiniteWavelength { axes: bad });
    }
    let shift = FourVector(shift);
    let mut worst = 0.0f64;
    for x in probes {
        let moved = state.evaluate(&(*x + shift));
        let here = state.evaluate(x);
        let mut diff_sqr = 0.0;
        for i in 0..4 {
            diff_sqr += (moved.0[i] - here.0[i]).norm_sqr();
        }
        worst = worst.max(diff_sqr.sqrt());
    }
    Ok(worst)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DiracError {
    /// Momentum, mass, or wavelength input is NaN or infinite.
    NonFiniteInput,
    /// Mass must be nonnegative.
    NegativeMass { mass: f64 },
    /// Energy component must be strictly positive for constructed states.
    NonPositiveEnergy { energy: f64 },
    /// Momentum is off the mass shell by `residual`.
    OffShell { residual: f64 },
    /// The flagged axes have zero momentum, hence infinite wavelength.
    InfiniteWavelength { axes: [bool; 4] },
    /// The flagged axes have zero wavelength; no finite momentum matches.
    ZeroWavelength { axes: [bool; 4] },
}

impl DiracError {
    fn axis_list(f: &mut fmt::Formatter<'_>, axes: &[bool; 4]) -> fmt::Result {
        let mut first = true;
        for (mu, &flag) in axes.iter().enumerate() {
            if flag {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{mu}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Display for DiracError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiracError::NonFiniteInput => write!(f, "non-finite input"),
            DiracError::NegativeMass { mass } => {
                write!(f, "mass must be nonnegative, got {mass}")
            }
            DiracError::NonPositiveEnergy { energy } => {
                write!(f, "energy component must be positive, got {energy}")
            }
            DiracError::OffShell { residual } => {
                write!(f, "momentum is off the mass shell (residual {residual})")
            }
            DiracError::InfiniteWavelength { axes } => {
                write!(f, "infinite wavelength on axes ")?;
                Self::axis_list(f, axes)
            }
            DiracError::ZeroWavelength { axes } => {
                write!(f, "zero wavelength on axes ")?;
                Self::axis_list(f, axes)
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DiracError {}

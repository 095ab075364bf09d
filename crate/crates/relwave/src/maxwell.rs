//! Source-free Maxwell fields in complex first-order form.
//!
//! The combinations f+ = E + iH and f- = E - iH turn the curl equations
//! into a pair of first-order wave equations: i df/dt = +/- (S . p) f with
//! p = -i grad, together with the transversality constraint k . f = 0. On
//! plane waves (S . k) acts as i k x, so f+ and f- are the +1 and -1
//! helicity eigenvectors of S . k_hat and the frequency is pinned to
//! omega = |k|.

use alloc::vec::Vec;
use core::fmt;

#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;

use crate::clifford::{big_gamma, spin_matrix};
use crate::matrix::ComplexMatrix;
use crate::{Complex64, RESIDUAL_TOL};

pub type RealVec3 = [f64; 3];
pub type ComplexVec3 = [Complex64; 3];

/// Components below this magnitude are skipped when picking the phase
/// anchor of a unit-normalized amplitude.
const PHASE_ANCHOR_FLOOR: f64 = 1e-12;

/// Packs real field vectors into the complex pair (E + iH, E - iH).
pub fn rs_from_eh(e: &RealVec3, h: &RealVec3) -> (ComplexVec3, ComplexVec3) {
    let mut plus = [Complex64::new(0.0, 0.0); 3];
    let mut minus = [Complex64::new(0.0, 0.0); 3];
    for i in 0..3 {
        plus[i] = Complex64::new(e[i], h[i]);
        minus[i] = Complex64::new(e[i], -h[i]);
    }
    (plus, minus)
}

/// The contraction k_x S_x + k_y S_y + k_z S_z of the wave vector with the
/// spin-1 generators. Acts on any vector v as i k x v.
pub fn s_dot_k(k: &RealVec3) -> ComplexMatrix {
    let mut acc = ComplexMatrix::zeros(3);
    for (axis, &component) in k.iter().enumerate() {
        acc = &acc + &spin_matrix(axis).scale(Complex64::new(component, 0.0));
    }
    acc
}

fn cross(a: &RealVec3, b: &RealVec3) -> RealVec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn cross_complex(k: &RealVec3, f: &ComplexVec3) -> ComplexVec3 {
    [
        f[2].scale(k[1]) - f[1].scale(k[2]),
        f[0].scale(k[2]) - f[2].scale(k[0]),
        f[1].scale(k[0]) - f[0].scale(k[1]),
    ]
}

fn norm(k: &RealVec3) -> f64 {
    (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt()
}

fn complex_norm(f: &ComplexVec3) -> f64 {
    f.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn max_component(f: &ComplexVec3) -> f64 {
    f.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn dot_complex(k: &RealVec3, f: &ComplexVec3) -> Complex64 {
    f[0].scale(k[0]) + f[1].scale(k[1]) + f[2].scale(k[2])
}

/// Rotates a unit amplitude so its first non-negligible component is real
/// and positive, removing the arbitrary overall phase.
fn fix_phase(f: &mut ComplexVec3) {
    for c in f.iter() {
        let mag = c.norm();
        if mag > PHASE_ANCHOR_FLOOR {
            let rotation = c.conj().unscale(mag);
            for component in f.iter_mut() {
                *component *= rotation;
            }
            return;
        }
    }
}

/// Unit-normalized helicity amplitudes (f+, f-) for the wave vector k.
///
/// Builds a right-handed transverse frame (e1, e2, k_hat) by projecting the
/// coordinate axis least aligned with k_hat, then returns
/// (e1 +/- i e2) / sqrt(2) with the overall phases fixed so the first
/// non-negligible component of each amplitude is real positive. Since e1
/// and e2 are real, the two amplitudes stay complex conjugates of each
/// other even after the phase fix.
pub fn solve_amplitudes(k: &RealVec3) -> Result<(ComplexVec3, ComplexVec3), MaxwellError> {
    let k_norm = norm(k);
    if !(k_norm > 0.0) || !k_norm.is_finite() {
        return Err(MaxwellError::ZeroWaveVector { k: *k });
    }
    let k_hat = [k[0] / k_norm, k[1] / k_norm, k[2] / k_norm];
    let mut axis = 0;
    for j in 1..3 {
        if k_hat[j].abs() < k_hat[axis].abs() {
            axis = j;
        }
    }
    let mut e1 = [0.0; 3];
    e1[axis] = 1.0;
    let projection = k_hat[axis];
    for j in 0..3 {
        e1[j] -= projection * k_hat[j];
    }
    let e1_norm = norm(&e1);
    for component in &mut e1 {
        *component /= e1_norm;
    }
    let e2 = cross(&k_hat, &e1);
    let mut plus = [Complex64::new(0.0, 0.0); 3];
    let mut minus = [Complex64::new(0.0, 0.0); 3];
    for j in 0..3 {
        plus[j] = Complex64::new(e1[j], e2[j]);
        minus[j] = Complex64::new(e1[j], -e2[j]);
    }
    let plus_scale = complex_norm(&plus);
    let minus_scale = complex_norm(&minus);
    for j in 0..3 {
        plus[j] = plus[j].unscale(plus_scale);
        minus[j] = minus[j].unscale(minus_scale);
    }
    fix_phase(&mut plus);
    fix_phase(&mut minus);
    Ok((plus, minus))
}

/// One real field sample of a plane wave.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EMFieldSample {
    pub e: RealVec3,
    pub h: RealVec3,
    pub position: RealVec3,
    pub time: f64,
}

/// A transverse plane wave in the complex pair representation, with
/// amplitudes for both helicity components and frequency omega = |k|.
#[derive(Clone, Debug, PartialEq)]
pub struct RSPlaneWave {
    f_plus_amp: ComplexVec3,
    f_minus_amp: ComplexVec3,
    wave_vector: RealVec3,
    omega: f64,
}

impl RSPlaneWave {
    /// Validating constructor: the frequency must satisfy the dispersion
    /// relation omega = |k| and both amplitudes must be transverse to k,
    /// each within [`RESIDUAL_TOL`] scaled by the magnitudes involved.
    pub fn new(
        f_plus_amp: ComplexVec3,
        f_minus_amp: ComplexVec3,
        wave_vector: RealVec3,
        omega: f64,
    ) -> Result<Self, MaxwellError> {
        let k_norm = norm(&wave_vector);
        if !(k_norm > 0.0) || !k_norm.is_finite() {
            return Err(MaxwellError::ZeroWaveVector { k: wave_vector });
        }
        let scale = k_norm.max(1.0);
        if !omega.is_finite() || (omega - k_norm).abs() > RESIDUAL_TOL * scale {
            return Err(MaxwellError::DispersionViolation {
                omega,
                wave_norm: k_norm,
            });
        }
        for amp in [&f_plus_amp, &f_minus_amp] {
            let dot_abs = dot_complex(&wave_vector, amp).norm();
            if dot_abs > RESIDUAL_TOL * scale * complex_norm(amp).max(1.0) {
                return Err(MaxwellError::NotTransverse { dot_abs });
            }
        }
        Ok(RSPlaneWave {
            f_plus_amp,
            f_minus_amp,
            wave_vector,
            omega,
        })
    }

    /// Builds the wave without validating dispersion or transversality.
    /// Intended for probing how the residuals react to broken inputs.
    pub fn new_unchecked(
        f_plus_amp: ComplexVec3,
        f_minus_amp: ComplexVec3,
        wave_vector: RealVec3,
        omega: f64,
    ) -> Self {
        RSPlaneWave {
            f_plus_amp,
            f_minus_amp,
            wave_vector,
            omega,
        }
    }

    /// The canonical wave for k: solved helicity amplitudes and
    /// omega = |k|.
    pub fn from_wave_vector(k: &RealVec3) -> Result<Self, MaxwellError> {
        let (plus, minus) = solve_amplitudes(k)?;
        Ok(RSPlaneWave {
            f_plus_amp: plus,
            f_minus_amp: minus,
            wave_vector: *k,
            omega: norm(k),
        })
    }

    pub fn f_plus_amp(&self) -> &ComplexVec3 {
        &self.f_plus_amp
    }

    pub fn f_minus_amp(&self) -> &ComplexVec3 {
        &self.f_minus_amp
    }

    pub fn wave_vector(&self) -> &RealVec3 {
        &self.wave_vector
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// The propagation factor exp(i (k . x - omega t)).
    pub fn phase(&self, position: &RealVec3, time: f64) -> Complex64 {
        let k_dot_x = self.wave_vector[0] * position[0]
            + self.wave_vector[1] * position[1]
            + self.wave_vector[2] * position[2];
        Complex64::from_polar(1.0, k_dot_x - self.omega * time)
    }

    /// Real fields at a spacetime point, unpacked from F = f+ exp(i phi)
    /// as E = Re F, H = Im F.
    pub fn field_sample(&self, position: &RealVec3, time: f64) -> EMFieldSample {
        let ph = self.phase(position, time);
        let mut e = [0.0; 3];
        let mut h = [0.0; 3];
        for j in 0..3 {
            let f = self.f_plus_amp[j] * ph;
            e[j] = f.re;
            h[j] = f.im;
        }
        EMFieldSample {
            e,
            h,
            position: *position,
            time,
        }
    }

    /// Component residuals of the two first-order equations at a spacetime
    /// point: (omega f+ - (S.k) f+, omega f- + (S.k) f-), both carrying
    /// the propagation phase.
    pub fn majorana_residual_vectors(
        &self,
        position: &RealVec3,
        time: f64,
    ) -> (ComplexVec3, ComplexVec3) {
        let ph = self.phase(position, time);
        let op = s_dot_k(&self.wave_vector);
        let acted_plus = op.mul_vec(&self.f_plus_amp);
        let acted_minus = op.mul_vec(&self.f_minus_amp);
        let mut plus = [Complex64::new(0.0, 0.0); 3];
        let mut minus = [Complex64::new(0.0, 0.0); 3];
        for j in 0..3 {
            plus[j] = (self.f_plus_amp[j].scale(self.omega) - acted_plus[j]) * ph;
            minus[j] = (self.f_minus_amp[j].scale(self.omega) + acted_minus[j]) * ph;
        }
        (plus, minus)
    }

    /// Largest residual component of the first-order equations.
    pub fn majorana_residual(&self, position: &RealVec3, time: f64) -> f64 {
        let (plus, minus) = self.majorana_residual_vectors(position, time);
        max_component(&plus).max(max_component(&minus))
    }

    /// Largest residual of the real curl equations dE/dt = curl H,
    /// dH/dt = -curl E and the two divergence constraints, evaluated on
    /// F = f+ exp(i phi) with E = Re F, H = Im F.
    pub fn curl_form_residual(&self, position: &RealVec3, time: f64) -> f64 {
        let ph = self.phase(position, time);
        let f = self.f_plus_amp.map(|amp| amp * ph);
        let ik_cross = cross_complex(&self.wave_vector, &f);
        let mut worst: f64 = 0.0;
        for j in 0..3 {
            let dt = f[j].scale(self.omega) * Complex64::new(0.0, -1.0);
            let curl = ik_cross[j] * Complex64::new(0.0, 1.0);
            // dE/dt - curl H and dH/dt + curl E.
            worst = worst.max((dt.re - curl.im).abs());
            worst = worst.max((dt.im + curl.re).abs());
        }
        let div = dot_complex(&self.wave_vector, &f) * Complex64::new(0.0, 1.0);
        worst.max(div.re.abs()).max(div.im.abs())
    }

    /// Residual of the block form (omega G0 - sum_j k_j Gj) acting on the
    /// stacked vector (f+, f-) exp(i phi). The top three components carry
    /// the f- equation, the bottom three the f+ equation.
    pub fn big_gamma_form_residual(&self, position: &RealVec3, time: f64) -> [Complex64; 6] {
        let ph = self.phase(position, time);
        let mut op = big_gamma(0).scale(Complex64::new(self.omega, 0.0));
        for j in 0..3 {
            op = &op - &big_gamma(j + 1).scale(Complex64::new(self.wave_vector[j], 0.0));
        }
        let mut stacked = Vec::with_capacity(6);
        stacked.extend_from_slice(&self.f_plus_amp);
        stacked.extend_from_slice(&self.f_minus_amp);
        let acted = op.mul_vec(&stacked);
        let mut out = [Complex64::new(0.0, 0.0); 6];
        for (slot, value) in out.iter_mut().zip(acted) {
            *slot = value * ph;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaxwellError {
    /// The wave vector is zero or non-finite; no transverse frame exists.
    ZeroWaveVector { k: RealVec3 },
    DispersionViolation { omega: f64, wave_norm: f64 },
    NotTransverse { dot_abs: f64 },
}

impl fmt::Display for MaxwellError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxwellError::ZeroWaveVector { k } => {
                write!(
                    f,
                    "wave vector must be nonzero and finite, got ({}, {}, {})",
                    k[0], k[1], k[2]
                )
            }
            MaxwellError::DispersionViolation { omega, wave_norm } => {
                write!(
                    f,
                    "frequency {omega} violates the dispersion relation for |k| = {wave_norm}"
                )
            }
            MaxwellError::NotTransverse { dot_abs } => {
                write!(f, "amplitude is not transverse to k (|k . f| = {dot_abs})")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MaxwellError {}

//! Numerical library for relativistic plane waves and geometric defect
//! models.
//!
//! The crate covers four connected pieces:
//!
//! * [`clifford`]: the 4x4 Dirac gamma matrices, the spin-1 triplet, and the
//!   6x6 block operators built from it, all with exactly representable
//!   entries so the algebraic identities hold bit-for-bit;
//! * [`dirac`]: positive-energy plane-wave solutions of the free Dirac
//!   equation, their wavelength parametrization, and the discrete
//!   translation symmetry that follows from it;
//! * [`ensemble`] and [`lightcone`]: a seeded Monte Carlo ensemble of
//!   equal-perimeter elliptic defects whose edges sweep hyperbolas, and the
//!   massless (light-cone) limit with its boost-invariant unit speed;
//! * [`maxwell`]: the spin-1 (Riemann-Silberstein) form of the free Maxwell
//!   equations and its monochromatic solutions of definite helicity.
//!
//! The library is `no_std`-compatible (it needs `alloc`); file IO and the
//! command-line frontend live in the companion `relwave-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]
// Negated comparisons like !(x > 0.0) are load-bearing: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod clifford;
pub mod dirac;
pub mod ensemble;
pub mod fourvec;
pub mod lightcone;
pub mod matrix;
pub mod maxwell;

mod sampling;

pub use num_complex::Complex64;

/// Absolute tolerance for residuals of unit-normalized quantities.
///
/// Residuals that are not unit-normalized (mass-shell defects, transversality
/// of long wave vectors) are compared against this tolerance scaled by the
/// magnitude of the terms entering them.
pub const RESIDUAL_TOL: f64 = 1e-12;

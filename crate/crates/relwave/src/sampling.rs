//! Deterministic uniform sampling helpers shared by the ensemble and the
//! probe-point generators.
//!
//! Draws are built directly from the top 53 bits of `next_u64`, so the
//! value stream is pinned by this crate (and the seed) alone, independent of
//! any distribution-sampling internals that may change across releases of
//! the rand ecosystem.

use rand_core::RngCore;

const SCALE: f64 = 1.0 / (1u64 << 53) as f64;

/// Uniform draw in [0, 1).
pub(crate) fn unit_f64<R: RngCore + ?Sized>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * SCALE
}

/// Uniform draw in [lo, hi).
pub(crate) fn uniform<R: RngCore + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    lo + unit_f64(rng) * (hi - lo)
}

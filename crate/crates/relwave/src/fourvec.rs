//! Minkowski four-vectors with signature (+, -, -, -).

use core::ops::{Add, Sub};

use crate::clifford::MetricSignature;

/// Contravariant four-vector; component 0 is time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector([t, x, y, z])
    }

    /// Time component.
    pub fn t(&self) -> f64 {
        self.0[0]
    }

    /// Spatial components.
    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Minkowski inner product a.b = a0 b0 - a1 b1 - a2 b2 - a3 b3.
    pub fn minkowski_dot(&self, other: &FourVector) -> f64 {
        let mut acc = 0.0;
        for mu in 0..4 {
            acc += MetricSignature::component(mu) * self.0[mu] * other.0[mu];
        }
        acc
    }

    /// Euclidean squared norm of the spatial part.
    pub fn spatial_norm_sqr(&self) -> f64 {
        self.0[1] * self.0[1] + self.0[2] * self.0[2] + self.0[3] * self.0[3]
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl Add for FourVector {
    type Output = FourVector;

    fn add(self, rhs: FourVector) -> FourVector {
        FourVector([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }
}

impl Sub for FourVector {
    type Output = FourVector;

    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
            self.0[3] - rhs.0[3],
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_uses_signature() {
        let p = FourVector::new(5.0, 0.0, 0.0, 4.0);
        assert_eq!(p.minkowski_dot(&p), 9.0);
        let x = FourVector::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(p.minkowski_dot(&x), 5.0 - 16.0);
    }

    #[test]
    fn null_vector_has_zero_norm() {
        let n = FourVector::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(n.minkowski_dot(&n), 0.0);
    }

    #[test]
    fn finiteness_check_catches_nan() {
        assert!(FourVector::new(1.0, 2.0, 3.0, 4.0).is_finite());
        assert!(!FourVector::new(f64::NAN, 0.0, 0.0, 0.0).is_finite());
        assert!(!FourVector::new(0.0, f64::INFINITY, 0.0, 0.0).is_finite());
    }
}

//! Gamma-matrix algebra: Dirac matrices, the spin-1 triplet, and the 6x6
//! block operators assembled from it.
//!
//! Every constructor returns a matrix whose entries are drawn from
//! {0, +-1, +-i}, so the defining identities -- the anticommutation relation
//! {gamma^mu, gamma^nu} = 2 g^{mu nu} I, the spin commutators
//! [S_i, S_j] = i eps_{ijk} S_k, hermiticity, and the cube identity
//! S_i^3 = S_i -- hold exactly in `f64` arithmetic and are compared with
//! `==` rather than a tolerance.

use core::fmt;

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;

const Z: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const NEG: Complex64 = Complex64::new(-1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);
const NEG_I: Complex64 = Complex64::new(0.0, -1.0);

/// Minkowski metric with signature (+, -, -, -); index 0 is time.
pub struct MetricSignature;

impl MetricSignature {
    pub const DIAG: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

    /// Diagonal component g^{mu mu}. Panics if `mu > 3`.
    pub fn component(mu: usize) -> f64 {
        Self::DIAG[mu]
    }
}

/// Dirac gamma matrix in the standard representation: `gamma(0)` is
/// diag(+1, +1, -1, -1) and the spatial matrices hold the Pauli blocks on
/// the antidiagonal. Panics if `mu > 3`.
#[rustfmt::skip]
pub fn gamma(mu: usize) -> ComplexMatrix {
    match mu {
        0 => ComplexMatrix::from_rows(&[
            &[ONE, Z,   Z,   Z  ],
            &[Z,   ONE, Z,   Z  ],
            &[Z,   Z,   NEG, Z  ],
            &[Z,   Z,   Z,   NEG],
        ]),
        1 => ComplexMatrix::from_rows(&[
            &[Z,   Z,   Z,   ONE],
            &[Z,   Z,   ONE, Z  ],
            &[Z,   NEG, Z,   Z  ],
            &[NEG, Z,   Z,   Z  ],
        ]),
        2 => ComplexMatrix::from_rows(&[
            &[Z,     Z, Z, NEG_I],
            &[Z,     Z, I, Z    ],
            &[Z,     I, Z, Z    ],
            &[NEG_I, Z, Z, Z    ],
        ]),
        3 => ComplexMatrix::from_rows(&[
            &[Z,   Z,   ONE, Z  ],
            &[Z,   Z,   Z,   NEG],
            &[NEG, Z,   Z,   Z  ],
            &[Z,   ONE, Z,   Z  ],
        ]),
        _ => panic!("gamma index must be 0..=3, got {mu}"),
    }
}

/// Spin-1 generator for `axis` 0, 1, or 2 (x, y, z): the 3x3 matrix with
/// entries (S_k)_{lm} = -i eps_{klm}. Panics if `axis > 2`.
#[rustfmt::skip]
pub fn spin_matrix(axis: usize) -> ComplexMatrix {
    match axis {
        0 => ComplexMatrix::from_rows(&[
            &[Z, Z,     Z    ],
            &[Z, Z,     NEG_I],
            &[Z, I,     Z    ],
        ]),
        1 => ComplexMatrix::from_rows(&[
            &[Z,     Z, I],
            &[Z,     Z, Z],
            &[NEG_I, Z, Z],
        ]),
        2 => ComplexMatrix::from_rows(&[
            &[Z, NEG_I, Z],
            &[I, Z,     Z],
            &[Z, Z,     Z],
        ]),
        _ => panic!("spin axis must be 0..=2, got {axis}"),
    }
}

/// 6x6 block operator: index 0 swaps the two 3-component halves
/// (identity blocks on the antidiagonal), while index k couples them through
/// the spin matrices, -S_k upper right and +S_k lower left. Panics if
/// `mu > 3`.
pub fn big_gamma(mu: usize) -> ComplexMatrix {
    assert!(mu <= 3, "block operator index must be 0..=3, got {mu}");
    let mut m = ComplexMatrix::zeros(6);
    if mu == 0 {
        for j in 0..3 {
            m.set(j, j + 3, ONE);
            m.set(j + 3, j, ONE);
        }
    } else {
        let s = spin_matrix(mu - 1);
        for r in 0..3 {
            for c in 0..3 {
                let v = s.get(r, c);
                m.set(r, c + 3, -v);
                m.set(r + 3, c, v);
            }
        }
    }
    m
}

/// AB + BA. Errors if the operands have different dimensions.
pub fn anticommutator(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
) -> Result<ComplexMatrix, AlgebraError> {
    check_dims(a, b)?;
    Ok(&(a * b) + &(b * a))
}

/// AB - BA. Errors if the operands have different dimensions.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, AlgebraError> {
    check_dims(a, b)?;
    Ok(&(a * b) - &(b * a))
}

fn check_dims(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<(), AlgebraError> {
    if a.dim() != b.dim() {
        return Err(AlgebraError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AlgebraError {}

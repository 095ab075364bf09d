//! Property tests for the plane-wave solver, checked against an
//! independent Gaussian-elimination oracle: on the mass shell the matrix
//! slash(p) - m I must have a two-dimensional kernel, and both solved
//! spin branches must lie inside it.

use proptest::prelude::*;
use relwave::dirac::{
    momentum_slash, translation_invariance_check, OnShellState, SpinBranch,
};
use relwave::fourvec::FourVector;
use relwave::matrix::ComplexMatrix;
use relwave::Complex64;

/// Rank by Gaussian elimination with partial pivoting. Pivots below
/// `tol` times the largest input entry count as zero.
#[allow(clippy::needless_range_loop)] // elimination reads one row while writing another
fn rank_of(matrix: &ComplexMatrix, tol: f64) -> usize {
    let dim = matrix.dim();
    let scale = matrix.max_abs().max(1e-300);
    let mut rows: Vec<Vec<Complex64>> = (0..dim)
        .map(|r| (0..dim).map(|c| matrix.get(r, c)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        if rank == dim {
            break;
        }
        let pivot_row = (rank..dim)
            .max_by(|&a, &b| {
                rows[a][col]
                    .norm()
                    .partial_cmp(&rows[b][col].norm())
                    .unwrap()
            })
            .unwrap();
        if rows[pivot_row][col].norm() <= tol * scale {
            continue;
        }
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col];
        for r in (rank + 1)..dim {
            let factor = rows[r][col] / pivot;
            for c in col..dim {
                let sub = factor * rows[rank][c];
                rows[r][c] -= sub;
            }
        }
        rank += 1;
    }
    rank
}

fn dirac_operator(state: &OnShellState) -> ComplexMatrix {
    let slash = momentum_slash(state.momentum());
    let mass_term = ComplexMatrix::identity(4).scale(Complex64::new(state.mass(), 0.0));
    &slash - &mass_term
}

fn signed(magnitude: f64, negative: bool) -> f64 {
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

#[test]
fn oracle_sees_full_rank_off_the_mass_shell() {
    // p . p = 16 but m = 1: the operator must be invertible, which also
    // validates the rank oracle itself.
    let p = FourVector::new(5.0, 3.0, 0.0, 0.0);
    let slash = momentum_slash(&p);
    let mass_term = ComplexMatrix::identity(4).scale(Complex64::new(1.0, 0.0));
    assert_eq!(rank_of(&(&slash - &mass_term), 1e-9), 4);
}

#[test]
fn known_state_has_rank_two_operator() {
    let state =
        OnShellState::from_three_momentum(3.0, [0.0, 0.0, 4.0], SpinBranch::Up).unwrap();
    assert_eq!(rank_of(&dirac_operator(&state), 1e-9), 2);
}

proptest! {
    #[test]
    fn operator_kernel_is_two_dimensional(
        mass in 0.1f64..10.0,
        px in 0.05f64..10.0, py in 0.05f64..10.0, pz in 0.05f64..10.0,
        sx: bool, sy: bool, sz: bool,
    ) {
        let p = [signed(px, sx), signed(py, sy), signed(pz, sz)];
        let state = OnShellState::from_three_momentum(mass, p, SpinBranch::Up).unwrap();
        prop_assert_eq!(rank_of(&dirac_operator(&state), 1e-9), 2);
    }

    #[test]
    fn both_branches_lie_in_the_kernel(
        mass in 0.1f64..10.0,
        px in 0.05f64..10.0, py in 0.05f64..10.0, pz in 0.05f64..10.0,
        sx: bool, sy: bool, sz: bool,
    ) {
        let p = [signed(px, sx), signed(py, sy), signed(pz, sz)];
        for branch in [SpinBranch::Up, SpinBranch::Down] {
            let state = OnShellState::from_three_momentum(mass, p, branch).unwrap();
            let acted = dirac_operator(&state).mul_vec(&state.amplitude().0);
            let worst = acted.iter().map(|c| c.norm()).fold(0.0, f64::max);
            let scale = state.momentum().t().max(1.0);
            prop_assert!(worst <= 1e-12 * scale, "residual {worst}");
            // The closed form is unit-normalized.
            prop_assert!((state.amplitude().norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn branches_stay_orthogonal(
        mass in 0.1f64..10.0,
        px in 0.05f64..10.0, py in 0.05f64..10.0, pz in 0.05f64..10.0,
        sx: bool, sy: bool, sz: bool,
    ) {
        let p = [signed(px, sx), signed(py, sy), signed(pz, sz)];
        let up = OnShellState::from_three_momentum(mass, p, SpinBranch::Up).unwrap();
        let down = OnShellState::from_three_momentum(mass, p, SpinBranch::Down).unwrap();
        let overlap = up.amplitude().dagger_dot(down.amplitude()).norm();
        prop_assert!(overlap < 1e-12, "overlap {overlap}");
    }

    #[test]
    fn phase_factor_has_unit_magnitude(
        mass in 0.1f64..10.0,
        px in 0.05f64..10.0, py in 0.05f64..10.0, pz in 0.05f64..10.0,
        t in -50.0f64..50.0, x in -50.0f64..50.0,
        y in -50.0f64..50.0, z in -50.0f64..50.0,
    ) {
        let state = OnShellState::from_three_momentum(mass, [px, py, pz], SpinBranch::Down).unwrap();
        let mag = state.phase(&FourVector::new(t, x, y, z)).norm();
        prop_assert!((mag - 1.0).abs() < 1e-14);
    }

    #[test]
    fn residual_is_position_independent_and_small(
        mass in 0.1f64..10.0,
        px in 0.05f64..10.0, py in 0.05f64..10.0, pz in 0.05f64..10.0,
        sx: bool, sy: bool, sz: bool,
        t in -5.0f64..5.0, x in -5.0f64..5.0, y in -5.0f64..5.0, z in -5.0f64..5.0,
    ) {
        let p = [signed(px, sx), signed(py, sy), signed(pz, sz)];
        let state = OnShellState::from_three_momentum(mass, p, SpinBranch::Up).unwrap();
        let probe = FourVector::new(t, x, y, z);
        let residual = state.dirac_residual(&probe).max_abs();
        let scale = state.momentum().t().max(1.0);
        prop_assert!(residual <= 1e-12 * scale, "residual {residual}");
    }

    #[test]
    fn whole_wavelength_shifts_are_invisible(
        mass in 0.1f64..10.0,
        px in 0.05f64..10.0, py in 0.05f64..10.0, pz in 0.05f64..10.0,
        sx: bool, sy: bool, sz: bool,
        n0 in -10i64..=10, n1 in -10i64..=10, n2 in -10i64..=10, n3 in -10i64..=10,
    ) {
        let p = [signed(px, sx), signed(py, sy), signed(pz, sz)];
        let state = OnShellState::from_three_momentum(mass, p, SpinBranch::Down).unwrap();
        let deviation = translation_invariance_check(&state, [n0, n1, n2, n3]).unwrap();
        prop_assert!(deviation < 1e-12, "deviation {deviation}");
    }
}

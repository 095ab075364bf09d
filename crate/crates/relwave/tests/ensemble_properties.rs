//! Oracle-backed checks of the ellipse perimeter constraint solver.
//!
//! Two independent oracles: a sign-change bisection root finder for the
//! semi-axis solve (no quadratic formula involved), and an adaptive
//! Simpson quadrature of the exact arc-length integral to bound the error
//! of the closed-form perimeter approximation.

use core::f64::consts::{PI, TAU};
use proptest::prelude::*;
use relwave::ensemble::{a_max, perimeter_of, run_ensemble, solve_b, EllipseDefect, EnsembleConfig};

/// Residual of the perimeter constraint at semi-minor axis b.
fn constraint_gap(a: f64, b: f64, perimeter: f64) -> f64 {
    PI * (1.5 * (a + b) - (a * b).sqrt()) - perimeter
}

/// Bisection root of the constraint in b, independent of the closed-form
/// quadratic. Valid for 0 < a < a_max, where the gap changes sign exactly
/// once on (0, perimeter].
fn bisect_b(a: f64, perimeter: f64) -> f64 {
    let mut lo = 1e-15;
    let mut hi = perimeter;
    assert!(constraint_gap(a, lo, perimeter) < 0.0);
    assert!(constraint_gap(a, hi, perimeter) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if constraint_gap(a, mid, perimeter) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Adaptive Simpson quadrature of f on [lo, hi].
fn adaptive_simpson(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, lo: f64, f_lo: f64, hi: f64, f_hi: f64) -> (f64, f64) {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        ((hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi), f_mid)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        lo: f64,
        f_lo: f64,
        hi: f64,
        f_hi: f64,
        whole: f64,
        f_mid: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let mid = 0.5 * (lo + hi);
        let (left, f_left_mid) = simpson(f, lo, f_lo, mid, f_mid);
        let (right, f_right_mid) = simpson(f, mid, f_mid, hi, f_hi);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        recurse(f, lo, f_lo, mid, f_mid, left, f_left_mid, tol / 2.0, depth - 1)
            + recurse(f, mid, f_mid, hi, f_hi, right, f_right_mid, tol / 2.0, depth - 1)
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    let (whole, f_mid) = simpson(f, lo, f_lo, hi, f_hi);
    recurse(f, lo, f_lo, hi, f_hi, whole, f_mid, tol, 40)
}

/// Exact ellipse perimeter 4 * integral of sqrt(a^2 sin^2 + b^2 cos^2).
fn exact_perimeter(a: f64, b: f64) -> f64 {
    4.0 * adaptive_simpson(
        &|theta: f64| {
            let s = theta.sin();
            let c = theta.cos();
            (a * a * s * s + b * b * c * c).sqrt()
        },
        0.0,
        PI / 2.0,
        1e-11,
    )
}

#[test]
fn quadrature_oracle_reproduces_the_circle() {
    assert!((exact_perimeter(1.0, 1.0) - TAU).abs() < 1e-9);
}

#[test]
fn closed_form_perimeter_stays_within_two_percent() {
    // Aspect ratios from 0.2 to 5, the stated accuracy window.
    let a = 1.0;
    for i in 0..=48 {
        let ratio = 0.2 + 4.8 * i as f64 / 48.0;
        let b = ratio * a;
        let approx = perimeter_of(a, b).unwrap();
        let exact = exact_perimeter(a, b);
        let rel = (approx - exact).abs() / exact;
        assert!(rel < 0.02, "ratio {ratio}: relative error {rel}");
    }
}

#[test]
fn solver_agrees_with_bisection_oracle() {
    let perimeter = TAU;
    let cap = a_max(perimeter);
    assert!((solve_b(0.5, perimeter).unwrap() - bisect_b(0.5, perimeter)).abs() < 1e-10);
    for i in 1..=50 {
        let a = cap * (0.01 + 0.98 * i as f64 / 50.0);
        let solved = solve_b(a, perimeter).unwrap();
        let oracle = bisect_b(a, perimeter);
        assert!(
            (solved - oracle).abs() <= 1e-10 * oracle.max(1.0),
            "a = {a}: solved {solved}, oracle {oracle}"
        );
    }
}

#[test]
fn edge_positions_increase_with_the_major_axis() {
    // The envelope construction relies on monotone dependence of the edge
    // position on a at fixed perimeter and time.
    let perimeter = TAU;
    let cap = a_max(perimeter);
    for &t in &[0.0, 1.0, 5.0] {
        let mut previous = f64::MIN;
        for i in 0..=300 {
            let a = cap * (0.001 + 0.998 * i as f64 / 300.0);
            let x = EllipseDefect::with_perimeter(a, perimeter)
                .unwrap()
                .position_at(t);
            assert!(x > previous, "t = {t}, a = {a}");
            previous = x;
        }
    }
}

#[test]
fn asymptotic_edge_speed_approaches_the_axis_ratio() {
    let d = EllipseDefect::with_perimeter(0.8, TAU).unwrap();
    let t = 1000.0 * d.b();
    let speed = (d.position_at(t + 1.0) - d.position_at(t)) / 1.0;
    let limit = d.a() / d.b();
    assert!((speed - limit).abs() / limit < 0.01, "speed {speed} vs {limit}");
}

#[test]
fn distinct_seeds_decorrelate_the_samples() {
    let base = EnsembleConfig::new(TAU, 64, 7, vec![0.0]);
    let mut other = base.clone();
    other.seed = 8;
    let first = run_ensemble(&base).unwrap();
    let second = run_ensemble(&other).unwrap();
    assert_ne!(first[0].sample_positions, second[0].sample_positions);
    // Same seed: bit-identical.
    let again = run_ensemble(&base).unwrap();
    assert_eq!(first, again);
}

proptest! {
    #[test]
    fn perimeter_is_symmetric_in_the_axes(
        a in 0.05f64..20.0,
        b in 0.05f64..20.0,
    ) {
        // Both orderings hit the same additions and multiplications, so
        // the results are bitwise equal.
        prop_assert_eq!(perimeter_of(a, b).unwrap(), perimeter_of(b, a).unwrap());
    }

    #[test]
    fn solve_round_trips_the_minor_axis(
        a in 0.1f64..10.0,
        ratio in 0.5f64..5.0,
    ) {
        // b >= a/2 keeps (a, b) on the branch the solver returns and away
        // from the degenerate boundary.
        let b = ratio * a;
        let perimeter = perimeter_of(a, b).unwrap();
        let solved = solve_b(a, perimeter).unwrap();
        prop_assert!((solved - b).abs() <= 1e-12 * b, "solved {} vs {}", solved, b);
    }

    #[test]
    fn regions_contain_samples_and_nest(
        seed in 0u64..1000,
        count in 1usize..200,
    ) {
        let cfg = EnsembleConfig::new(TAU, count, seed, vec![0.0, 0.7, 1.9]);
        let regions = run_ensemble(&cfg).unwrap();
        for r in &regions {
            for &x in &r.sample_positions {
                prop_assert!(r.x_lo <= x && x <= r.x_hi);
            }
        }
        for pair in regions.windows(2) {
            prop_assert!(pair[1].x_lo > pair[0].x_lo);
            prop_assert!(pair[1].x_hi > pair[0].x_hi);
        }
    }
}

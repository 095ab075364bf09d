//! Light-cone kinematics in 1+1 dimensions.
//!
//! The right edge of a hyperbolic defect sits at x = a sqrt(1 + t^2/b^2);
//! as a -> 0 the hyperboloid degenerates to the cone x^2 - t^2 = 0 whose
//! edges move at exactly unit speed. Lorentz boosts preserve that unit
//! speed and the interval x^2 - t^2, while the hyperbola's asymptotic
//! speed a/b is frame dependent.

use core::fmt;

#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;

/// Right-edge coordinate a sqrt(1 + (t/b)^2) of the hyperboloid time
/// slice. Requires a >= 0 and b > 0.
pub fn slice_radius(a: f64, b: f64, t: f64) -> Result<f64, LightconeError> {
    if !a.is_finite() || !b.is_finite() || !t.is_finite() {
        return Err(LightconeError::NonFiniteInput);
    }
    if a < 0.0 {
        return Err(LightconeError::NegativeThroat { a });
    }
    if b <= 0.0 {
        return Err(LightconeError::NonPositiveTimeScale { b });
    }
    let r = t / b;
    Ok(a * (1.0 + r * r).sqrt())
}

/// Edge pair (+t, -t) of the degenerate (light-cone) defect at time t.
pub fn cone_position(t: f64) -> (f64, f64) {
    (t, -t)
}

/// Velocity parameter of a boost along x, restricted to |v| < 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostParameter {
    v: f64,
}

impl BoostParameter {
    pub fn new(v: f64) -> Result<Self, LightconeError> {
        if !v.is_finite() || v.abs() >= 1.0 {
            return Err(LightconeError::SpeedOutOfRange { v });
        }
        Ok(BoostParameter { v })
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - self.v * self.v).sqrt()
    }
}

/// Boosted coordinates x' = gamma (x - v t), t' = gamma (t - v x).
pub fn boost_point(x: f64, t: f64, boost: BoostParameter) -> (f64, f64) {
    let g = boost.gamma();
    let v = boost.v;
    (g * (x - v * t), g * (t - v * x))
}

/// Boosts the null worldline points (t_i, t_i) and returns the largest
/// deviation of |dx'/dt'| from 1 over consecutive pairs.
///
/// Needs at least two times; pairs whose boosted times coincide are a
/// degenerate-slope error.
pub fn invariant_speed_check(
    boost: BoostParameter,
    times: &[f64],
) -> Result<f64, LightconeError> {
    if times.len() < 2 {
        return Err(LightconeError::TooFewTimes { count: times.len() });
    }
    let mut worst = 0.0f64;
    for pair in times.windows(2) {
        let (x0, t0) = boost_point(pair[0], pair[0], boost);
        let (x1, t1) = boost_point(pair[1], pair[1], boost);
        let dt = t1 - t0;
        if dt == 0.0 {
            return Err(LightconeError::CoincidentTimes { t: pair[1] });
        }
        let slope = (x1 - x0) / dt;
        worst = worst.max((slope.abs() - 1.0).abs());
    }
    Ok(worst)
}

/// Asymptotic edge speed a/b of the hyperbolic trajectory. Unlike the
/// cone's unit speed, this ratio is not preserved by boosts. Panics unless
/// both arguments are positive.
pub fn hyperboloid_asymptotic_speed(a: f64, b: f64) -> f64 {
    assert!(a > 0.0 && b > 0.0, "semi-axes must be positive");
    a / b
}

/// A time slice profile: either a genuine hyperboloid or its degenerate
/// light-cone limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HyperboloidSlice {
    Hyperbolic { a: f64, b: f64 },
    Cone,
}

impl HyperboloidSlice {
    /// Validated hyperbolic profile; use the [`HyperboloidSlice::Cone`]
    /// variant for the degenerate limit.
    pub fn new(a: f64, b: f64) -> Result<Self, LightconeError> {
        slice_radius(a, b, 0.0)?;
        Ok(HyperboloidSlice::Hyperbolic { a, b })
    }

    /// Slice radius at time t; the cone's radius is |t|.
    pub fn radius(&self, t: f64) -> f64 {
        match *self {
            HyperboloidSlice::Hyperbolic { a, b } => {
                slice_radius(a, b, t).expect("axes validated at construction")
            }
            HyperboloidSlice::Cone => t.abs(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LightconeError {
    NonFiniteInput,
    NegativeThroat { a: f64 },
    NonPositiveTimeScale { b: f64 },
    SpeedOutOfRange { v: f64 },
    TooFewTimes { count: usize },
    CoincidentTimes { t: f64 },
}

impl fmt::Display for LightconeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LightconeError::NonFiniteInput => write!(f, "non-finite input"),
            LightconeError::NegativeThroat { a } => {
                write!(f, "throat radius must be non-negative, got {a}")
            }
            LightconeError::NonPositiveTimeScale { b } => {
                write!(f, "time scale must be positive, got {b}")
            }
            LightconeError::SpeedOutOfRange { v } => {
                write!(f, "boost speed must satisfy |v| < 1, got {v}")
            }
            LightconeError::TooFewTimes { count } => {
                write!(f, "need at least two times, got {count}")
            }
            LightconeError::CoincidentTimes { t } => {
                write!(f, "coincident boosted times near t = {t}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LightconeError {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slice_radius_at_origin_is_throat() {
        assert_eq!(slice_radius(1.0, 1.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn unit_hyperbola_reaches_two_at_sqrt_three() {
        let r = slice_radius(1.0, 1.0, 3.0f64.sqrt()).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_time_scale_is_rejected() {
        assert!(matches!(
            slice_radius(1.0, 0.0, 1.0),
            Err(LightconeError::NonPositiveTimeScale { .. })
        ));
        assert!(matches!(
            slice_radius(-1.0, 1.0, 1.0),
            Err(LightconeError::NegativeThroat { .. })
        ));
    }

    #[test]
    fn cone_edges_are_symmetric_and_unit_speed() {
        let (plus, minus) = cone_position(2.5);
        assert_eq!(plus, 2.5);
        assert_eq!(minus, -2.5);
        // Exact unit slope between any two slices.
        let (x0, _) = cone_position(0.3);
        let (x1, _) = cone_position(1.7);
        assert_eq!((x1 - x0) / (1.7 - 0.3), 1.0);
    }

    #[test]
    fn boost_speed_is_validated() {
        assert!(BoostParameter::new(0.99).is_ok());
        assert!(matches!(
            BoostParameter::new(1.0),
            Err(LightconeError::SpeedOutOfRange { .. })
        ));
        assert!(matches!(
            BoostParameter::new(-1.5),
            Err(LightconeError::SpeedOutOfRange { .. })
        ));
    }

    #[test]
    fn boost_preserves_the_interval() {
        let boost = BoostParameter::new(0.6).unwrap();
        let (x, t) = (2.0, 0.5);
        let (xp, tp) = boost_point(x, t, boost);
        let before = x * x - t * t;
        let after = xp * xp - tp * tp;
        assert!((before - after).abs() < 1e-12 * before.abs().max(1.0));
    }

    #[test]
    fn null_worldline_keeps_unit_speed_under_boost() {
        let boost = BoostParameter::new(0.5).unwrap();
        let dev = invariant_speed_check(boost, &[0.0, 1.0, 2.0, 3.5]).unwrap();
        assert!(dev < 1e-12, "deviation {dev}");
    }

    #[test]
    fn speed_check_needs_two_distinct_times() {
        let boost = BoostParameter::new(0.5).unwrap();
        assert!(matches!(
            invariant_speed_check(boost, &[1.0]),
            Err(LightconeError::TooFewTimes { .. })
        ));
        assert!(matches!(
            invariant_speed_check(boost, &[1.0, 1.0]),
            Err(LightconeError::CoincidentTimes { .. })
        ));
    }

    #[test]
    fn asymptotic_speed_is_axis_ratio() {
        assert_eq!(hyperboloid_asymptotic_speed(2.0, 1.0), 2.0);
        assert_eq!(hyperboloid_asymptotic_speed(1.0, 2.0), 0.5);
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn asymptotic_speed_rejects_zero_axis() {
        let _ = hyperboloid_asymptotic_speed(1.0, 0.0);
    }

    #[test]
    fn degenerate_slice_radius_is_absolute_time() {
        let cone = HyperboloidSlice::Cone;
        assert_eq!(cone.radius(-3.0), 3.0);
        assert_eq!(cone.radius(2.0), 2.0);
        let hyper = HyperboloidSlice::new(1.0, 1.0).unwrap();
        assert_eq!(hyper.radius(0.0), 1.0);
    }
}

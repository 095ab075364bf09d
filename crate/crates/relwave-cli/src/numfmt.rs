//! Number formatting for CSV and JSON output files.
//!
//! Doubles are printed with 17 significant digits, enough to round-trip
//! any finite f64, so identical runs yield byte-identical files. Negative
//! zero is normalized to zero first, since the two compare equal but print
//! differently.

pub fn fmt_f64(value: f64) -> String {
    if value.is_nan() {
        return "nan".to_owned();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    let normalized = if value == 0.0 { 0.0 } else { value };
    format!("{normalized:.16e}")
}

#[cfg(test)]
mod tests {
    use super::fmt_f64;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_f64(5.0), "5.0000000000000000e0");
        assert_eq!(fmt_f64(-0.5), "-5.0000000000000000e-1");
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(fmt_f64(-0.0), "0.0000000000000000e0");
    }

    #[test]
    fn non_finite_values_have_stable_names() {
        assert_eq!(fmt_f64(f64::INFINITY), "inf");
        assert_eq!(fmt_f64(f64::NEG_INFINITY), "-inf");
        assert_eq!(fmt_f64(f64::NAN), "nan");
    }

    #[test]
    fn round_trips_through_parse() {
        for &v in &[1.0 / 3.0, core::f64::consts::PI, 1e-300, 6.02e23] {
            let printed = fmt_f64(v);
            assert_eq!(printed.parse::<f64>().unwrap(), v);
        }
    }
}

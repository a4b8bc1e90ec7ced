//! Float helpers routed through `libm` so the crate builds without `std`.
//!
//! Natural logarithms throughout; every log-based bound in the crate uses
//! base e (the choice is absorbed by the tunable constants).

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// ln(x) raised to an integer power.
pub(crate) fn ln_pow(x: f64, p: i32) -> f64 {
    powi(ln(x), p)
}

pub(crate) fn powi(x: f64, p: i32) -> f64 {
    libm::pow(x, f64::from(p))
}

pub(crate) fn powf(x: f64, p: f64) -> f64 {
    libm::pow(x, p)
}

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

/// Euler's number, written out since `core` has no `f64::consts::E` path we
/// want to depend on in expressions mixing libm results.
pub(crate) const E: f64 = core::f64::consts::E;

/// Round-half-up to a usize, clamped below at `floor`.
pub(crate) fn round_at_least(x: f64, floor: usize) -> usize {
    if !x.is_finite() || x <= floor as f64 {
        floor
    } else {
        libm::round(x) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_matches_std() {
        for &x in &[0.5, 1.0, 2.0, 15.0, 1e6] {
            assert!((ln(x) - x.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn round_at_least_floors() {
        assert_eq!(round_at_least(0.2, 1), 1);
        assert_eq!(round_at_least(2.6, 1), 3);
        assert_eq!(round_at_least(f64::NAN, 1), 1);
    }
}

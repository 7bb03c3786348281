//! Scale-aware floating point comparison and angle reduction.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::error::{Error, Result};

/// Comparison threshold applied as `|x - y| <= eps * (1 + max(|x|, |y|))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps > 0.0 {
            Ok(Self { eps })
        } else {
            Err(Error::InvalidArgument(format!(
                "tolerance must be finite and positive, got {eps}"
            )))
        }
    }

    #[inline]
    pub fn eps(&self) -> f64 {
        self.eps
    }

    #[inline]
    pub fn close(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.eps * (1.0 + x.abs().max(y.abs()))
    }

    #[inline]
    pub fn is_zero(&self, x: f64) -> bool {
        self.close(x, 0.0)
    }

    /// Threshold scaled by an explicit reference magnitude.
    #[inline]
    pub fn scaled(&self, scale: f64) -> f64 {
        self.eps * (1.0 + scale.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps: Self::DEFAULT_EPS,
        }
    }
}

/// Reduces an angle into `[0, 2π)`.
///
/// `rem_euclid` can round up to exactly `2π` for tiny negative inputs, which is
/// folded back to `0` so the result is idempotent.
pub fn wrap_tau(angle: f64) -> f64 {
    let r = angle.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Reduces an angle into `[0, π)`.
pub fn wrap_pi(angle: f64) -> f64 {
    let r = angle.rem_euclid(PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

/// Distance between two angles on the circle, in `[0, π]`.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = wrap_tau(a - b);
    d.min(TAU - d)
}

pub(crate) fn require_finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be finite, got {value}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_eps() {
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(-1e-3).is_err());
        assert!(Tolerance::new(f64::NAN).is_err());
        assert!(Tolerance::new(1e-12).is_ok());
    }

    #[test]
    fn close_is_scale_aware() {
        let tol = Tolerance::default();
        assert!(tol.close(1e6, 1e6 + 1e-4));
        assert!(!tol.close(1.0, 1.0 + 1e-6));
        assert!(tol.close(0.0, 5e-10));
        assert!(!tol.close(0.0, 5e-9));
    }

    #[test]
    fn wrap_never_returns_upper_bound() {
        assert_eq!(wrap_tau(-1e-18), 0.0);
        assert_eq!(wrap_tau(TAU), 0.0);
        assert_eq!(wrap_pi(-1e-18), 0.0);
        assert_eq!(wrap_pi(PI), 0.0);
        let x = 1.234_567;
        assert_eq!(wrap_tau(wrap_tau(x + TAU)), wrap_tau(x + TAU));
    }

    #[test]
    fn angle_distance_wraps() {
        assert!(angle_distance(1e-12, TAU - 1e-12) < 1e-11);
        assert!((angle_distance(0.0, PI) - PI).abs() < 1e-15);
    }
}

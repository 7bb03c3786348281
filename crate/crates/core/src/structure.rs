//! Parametrization of trace-zero symmetric 2×2 matrices and of O(2).
//!
//! Every trace-zero symmetric 2×2 matrix is `λ·[[cos θ, sin θ], [sin θ, −cos θ]]`,
//! i.e. a reflection matrix scaled by `λ`. The parametrization is 2-to-1 over
//! `λ ∈ ℝ`; the canonical form keeps `λ ≥ 0` and folds the sign into `θ + π`.
//! The reflection axis of the matrix sits at angle `θ / 2`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::tolerance::{require_finite, wrap_tau, Tolerance};

/// A trace-zero symmetric 2×2 matrix in canonical `(λ, θ)` form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceZeroSym2 {
    lambda: f64,
    theta: f64,
}

impl TraceZeroSym2 {
    pub const ZERO: TraceZeroSym2 = TraceZeroSym2 {
        lambda: 0.0,
        theta: 0.0,
    };

    /// Canonicalizes an arbitrary `(λ, θ)` pair.
    pub fn new(lambda: f64, theta: f64) -> Result<Self> {
        require_finite("lambda", lambda)?;
        require_finite("theta", theta)?;
        let (lambda, theta) = normalize_sign(lambda, theta);
        if lambda == 0.0 {
            return Ok(Self::ZERO);
        }
        Ok(Self {
            lambda,
            theta: wrap_tau(theta),
        })
    }

    #[inline]
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Matrix angle in `[0, 2π)`.
    #[inline]
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Angle of the reflection axis, `θ / 2 ∈ [0, π)`.
    #[inline]
    pub fn axis_angle(&self) -> f64 {
        self.theta / 2.0
    }

    pub fn matrix(&self) -> Mat2 {
        param_matrix(self.lambda, self.theta)
    }

    /// Eigenvalues in ascending order: `(−λ, λ)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        (-self.lambda, self.lambda)
    }
}

/// Rotation or reflection: the two families making up O(2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Orthogonal2 {
    /// `[[cos α, sin α], [−sin α, cos α]]`, determinant `+1`.
    Rotation { alpha: f64 },
    /// `[[cos β, sin β], [sin β, −cos β]]`, determinant `−1`.
    Reflection { beta: f64 },
}

impl Orthogonal2 {
    pub fn rotation(alpha: f64) -> Self {
        Orthogonal2::Rotation {
            alpha: wrap_tau(alpha),
        }
    }

    pub fn reflection(beta: f64) -> Self {
        Orthogonal2::Reflection {
            beta: wrap_tau(beta),
        }
    }

    pub fn angle(&self) -> f64 {
        match *self {
            Orthogonal2::Rotation { alpha } => alpha,
            Orthogonal2::Reflection { beta } => beta,
        }
    }

    pub fn is_rotation(&self) -> bool {
        matches!(self, Orthogonal2::Rotation { .. })
    }

    /// Determinant sign of the variant.
    pub fn det(&self) -> f64 {
        match self {
            Orthogonal2::Rotation { .. } => 1.0,
            Orthogonal2::Reflection { .. } => -1.0,
        }
    }

    pub fn matrix(&self) -> Mat2 {
        match *self {
            Orthogonal2::Rotation { alpha } => {
                let (s, c) = alpha.sin_cos();
                Mat2::new(c, s, -s, c)
            }
            Orthogonal2::Reflection { beta } => param_matrix(1.0, beta),
        }
    }
}

fn normalize_sign(lambda: f64, theta: f64) -> (f64, f64) {
    if lambda < 0.0 {
        (-lambda, wrap_tau(theta + PI))
    } else {
        (lambda, theta)
    }
}

fn param_matrix(lambda: f64, theta: f64) -> Mat2 {
    let (s, c) = theta.sin_cos();
    let a = lambda * c;
    let b = lambda * s;
    Mat2::new(a, b, b, -a)
}

/// Builds `[[λ cos θ, λ sin θ], [λ sin θ, −λ cos θ]]`.
///
/// A negative `λ` is first rewritten as `(|λ|, θ + π mod 2π)`, so both
/// parametrizations of the same matrix produce bitwise-identical entries.
pub fn matrix_from_params(lambda: f64, theta: f64) -> Result<Mat2> {
    require_finite("lambda", lambda)?;
    require_finite("theta", theta)?;
    let (lambda, theta) = normalize_sign(lambda, theta);
    Ok(param_matrix(lambda, theta))
}

/// Inverse of [`matrix_from_params`]: recovers canonical `(λ, θ)`.
///
/// `λ ≤ eps` is reported as the canonical zero `(0, 0)`.
pub fn decompose(m: &Mat2, tol: Tolerance) -> Result<TraceZeroSym2> {
    let [[p, q], [r, s]] = m.rows;
    if !tol.close(q, r) {
        return Err(Error::NotSymmetric {
            row: 0,
            col: 1,
            upper: q,
            lower: r,
        });
    }
    if !tol.close(p, -s) {
        return Err(Error::NotTraceZero { trace: p + s });
    }
    let a = (p - s) / 2.0;
    let b = (q + r) / 2.0;
    let lambda = a.hypot(b);
    if !lambda.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "matrix entries must be finite, got {:?}",
            m.rows
        )));
    }
    if lambda <= tol.eps() {
        return Ok(TraceZeroSym2::ZERO);
    }
    Ok(TraceZeroSym2 {
        lambda,
        theta: wrap_tau(b.atan2(a)),
    })
}

/// Classifies an orthogonal 2×2 matrix as a rotation or a reflection.
///
/// Fails when `MᵀM` is not the identity within `tol`, or when the determinant
/// is within `tol` of neither `+1` nor `−1`.
pub fn classify_orthogonal(m: &Mat2, tol: Tolerance) -> Result<Orthogonal2> {
    let gram = m.transpose() * *m;
    if !gram.approx_eq(&Mat2::IDENTITY, tol) {
        return Err(Error::NotOrthogonal(format!(
            "MᵀM deviates from the identity by {:e}",
            gram.max_abs_diff(&Mat2::IDENTITY)
        )));
    }
    let det = m.det();
    let angle = wrap_tau(m.get(0, 1).atan2(m.get(0, 0)));
    if tol.close(det, 1.0) {
        Ok(Orthogonal2::Rotation { alpha: angle })
    } else if tol.close(det, -1.0) {
        Ok(Orthogonal2::Reflection { beta: angle })
    } else {
        Err(Error::NotOrthogonal(format!(
            "determinant {det} is neither +1 nor -1"
        )))
    }
}

/// Splits `A` as `λ·B` with `B` an orthogonal reflection matrix.
///
/// The zero matrix yields the witness `B = Reflection(0)`, `λ = 0`.
pub fn corollary_witness(a: &TraceZeroSym2) -> (Orthogonal2, f64) {
    (Orthogonal2::Reflection { beta: a.theta }, a.lambda)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_2;

    use super::*;
    use crate::tolerance::angle_distance;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn params_zero_scale() {
        let m = matrix_from_params(0.0, 1.7).unwrap();
        assert_eq!(m, Mat2::ZERO);
    }

    #[test]
    fn params_identity_angle() {
        assert_eq!(
            matrix_from_params(1.0, 0.0).unwrap(),
            Mat2::new(1.0, 0.0, 0.0, -1.0)
        );
    }

    #[test]
    fn params_three_four_five() {
        // 5·cos(atan2(4,3)) = 3.0000000000000004, 5·sin(..) = 3.9999999999999996
        let m = matrix_from_params(5.0, 0.927_295_218_001_612_2).unwrap();
        assert!(m.approx_eq(&Mat2::new(3.0, 4.0, 4.0, -3.0), tol()));
        assert_eq!(m.trace(), 0.0);
        assert_eq!(m.get(0, 1), m.get(1, 0));
    }

    #[test]
    fn params_reject_non_finite() {
        assert!(matches!(
            matrix_from_params(f64::NAN, 0.0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matrix_from_params(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn negative_scale_matches_shifted_angle_exactly() {
        for &(l, t) in &[(2.5, 0.3), (0.1, 6.0), (7.0, 3.5), (1.0, 0.0)] {
            assert_eq!(
                matrix_from_params(-l, t).unwrap(),
                matrix_from_params(l, wrap_tau(t + PI)).unwrap()
            );
        }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&Mat2::ZERO, tol()).unwrap(), TraceZeroSym2::ZERO);
        let d = decompose(&Mat2::new(1.0, 0.0, 0.0, -1.0), tol()).unwrap();
        assert_eq!((d.lambda(), d.theta()), (1.0, 0.0));
        let d = decompose(&Mat2::new(3.0, 4.0, 4.0, -3.0), tol()).unwrap();
        assert_eq!(d.lambda(), 5.0);
        assert!((d.theta() - 0.927_295_218_001_612_2).abs() < 1e-15);
        assert!((d.axis_angle() - 0.463_647_609_000_806_1).abs() < 1e-15);
    }

    #[test]
    fn decompose_errors() {
        assert!(matches!(
            decompose(&Mat2::new(1.0, 2.0, 3.0, 4.0), tol()),
            Err(Error::NotSymmetric { .. })
        ));
        assert!(matches!(
            decompose(&Mat2::new(1.0, 2.0, 2.0, 4.0), tol()),
            Err(Error::NotTraceZero { trace }) if trace == 5.0
        ));
    }

    #[test]
    fn canonical_form() {
        let a = TraceZeroSym2::new(-2.0, 0.5).unwrap();
        assert_eq!(a.lambda(), 2.0);
        assert!((a.theta() - (0.5 + PI)).abs() < 1e-15);
        assert_eq!(TraceZeroSym2::new(0.0, 3.0).unwrap(), TraceZeroSym2::ZERO);
        assert_eq!(a.eigenvalues(), (-2.0, 2.0));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_orthogonal(&Mat2::IDENTITY, tol()).unwrap(),
            Orthogonal2::Rotation { alpha: 0.0 }
        );
        assert_eq!(
            classify_orthogonal(&Mat2::new(0.0, 1.0, 1.0, 0.0), tol()).unwrap(),
            Orthogonal2::Reflection { beta: FRAC_PI_2 }
        );
        let (s, c) = 0.3f64.sin_cos();
        let got = classify_orthogonal(&Mat2::new(c, s, -s, c), tol()).unwrap();
        assert!(got.is_rotation());
        assert!(angle_distance(got.angle(), 0.3) < 1e-15);
    }

    #[test]
    fn classify_rejects_non_orthogonal() {
        assert!(matches!(
            classify_orthogonal(&Mat2::new(2.0, 0.0, 0.0, 0.5), tol()),
            Err(Error::NotOrthogonal(_))
        ));
        assert!(classify_orthogonal(&Mat2::new(f64::NAN, 0.0, 0.0, 1.0), tol()).is_err());
    }

    #[test]
    fn witness_examples() {
        let a = decompose(&Mat2::new(0.0, 1.0, 1.0, 0.0), tol()).unwrap();
        let (b, l) = corollary_witness(&a);
        assert_eq!(b, Orthogonal2::Reflection { beta: FRAC_PI_2 });
        assert_eq!(l, 1.0);

        let a = decompose(&Mat2::new(3.0, 4.0, 4.0, -3.0), tol()).unwrap();
        let (b, l) = corollary_witness(&a);
        assert_eq!(l, 5.0);
        assert!(b.matrix().approx_eq(&Mat2::new(0.6, 0.8, 0.8, -0.6), tol()));
        assert_eq!(b.det(), -1.0);
        assert!(tol().close(b.matrix().det(), -1.0));

        let (b, l) = corollary_witness(&TraceZeroSym2::ZERO);
        assert_eq!((b, l), (Orthogonal2::Reflection { beta: 0.0 }, 0.0));
        assert_eq!(b.matrix(), Mat2::new(1.0, 0.0, 0.0, -1.0));
    }
}

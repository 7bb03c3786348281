//! Reflections across lines through the origin, the scaled reflection map,
//! and rotation∘reflection composition.
//!
//! Two angle conventions meet here. An [`AxisLine`] carries the *axis* angle
//! `φ ∈ [0, π)`; its reflection matrix uses the *matrix* angle `2φ`. Functions
//! that take a matrix angle say so in their parameter name.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{Mat2, Point2};
use crate::structure::TraceZeroSym2;
use crate::tolerance::{require_finite, wrap_pi, wrap_tau, Tolerance};

/// Line through the origin at angle `phi` from the positive x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxisLine {
    phi: f64,
}

impl AxisLine {
    pub fn new(phi: f64) -> Result<Self> {
        require_finite("axis angle", phi)?;
        Ok(Self { phi: wrap_pi(phi) })
    }

    #[inline]
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Angle of the reflection matrix, `2φ ∈ [0, 2π)`.
    #[inline]
    pub fn matrix_angle(&self) -> f64 {
        2.0 * self.phi
    }

    /// Unit direction vector of the line.
    pub fn direction(&self) -> Point2 {
        let (s, c) = self.phi.sin_cos();
        Point2::new(c, s)
    }

    pub fn perpendicular(&self) -> AxisLine {
        AxisLine {
            phi: wrap_pi(self.phi + std::f64::consts::FRAC_PI_2),
        }
    }

    /// `|x sin φ − y cos φ| ≤ eps·(1 + ‖p‖)`.
    pub fn contains(&self, p: &Point2, tol: Tolerance) -> bool {
        let (s, c) = self.phi.sin_cos();
        (p.x * s - p.y * c).abs() <= tol.scaled(p.norm())
    }

    pub fn reflection_matrix(&self) -> Mat2 {
        reflection_matrix(self.matrix_angle())
    }
}

/// `[[cos θ, sin θ], [sin θ, −cos θ]]` for a matrix angle `θ`.
pub fn reflection_matrix(theta_mat: f64) -> Mat2 {
    let (s, c) = theta_mat.sin_cos();
    Mat2::new(c, s, s, -c)
}

/// Reflects `p` across `axis`.
pub fn reflect_point(p: Point2, axis: AxisLine) -> Point2 {
    let (s, c) = axis.matrix_angle().sin_cos();
    Point2::new(p.x * c + p.y * s, p.x * s - p.y * c)
}

/// Reflection through the secant/cosecant coordinates of the point's polar angle.
///
/// With `α` the polar angle of `p`, the image is
/// `(x·sec α·cos(2φ − α), y·cosec α·sin(2φ − α))`. The formula is only used in
/// the first-quadrant wedge `0 < α ≤ φ ≤ 2φ − α < π/2` with `x, y > 0`, where
/// neither `sec` nor `cosec` blows up; outside it `None` is returned.
pub fn reflect_point_polar(p: Point2, axis: AxisLine) -> Option<Point2> {
    if !(p.x > 0.0 && p.y > 0.0) {
        return None;
    }
    let alpha = p.y.atan2(p.x);
    let phi = axis.phi();
    let image_angle = 2.0 * phi - alpha;
    if !(alpha <= phi && image_angle < std::f64::consts::FRAC_PI_2) {
        return None;
    }
    Some(Point2::new(
        p.x / alpha.cos() * image_angle.cos(),
        p.y / alpha.sin() * image_angle.sin(),
    ))
}

/// The map `p ↦ λ·reflect(p, axis)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReflectScale {
    pub lambda: f64,
    pub axis: AxisLine,
}

impl ReflectScale {
    pub fn new(lambda: f64, axis_angle: f64) -> Result<Self> {
        require_finite("lambda", lambda)?;
        Ok(Self {
            lambda,
            axis: AxisLine::new(axis_angle)?,
        })
    }

    /// The map whose matrix is `a`, axis at half the matrix angle.
    pub fn from_trace_zero(a: &TraceZeroSym2) -> Self {
        Self {
            lambda: a.lambda(),
            axis: AxisLine {
                phi: wrap_pi(a.axis_angle()),
            },
        }
    }

    pub fn to_trace_zero(&self) -> TraceZeroSym2 {
        TraceZeroSym2::new(self.lambda, self.axis.matrix_angle()).expect("finite by construction")
    }

    pub fn matrix(&self) -> Mat2 {
        self.axis.reflection_matrix().scale(self.lambda)
    }

    #[inline]
    pub fn apply(&self, p: Point2) -> Point2 {
        let r = reflect_point(p, self.axis);
        Point2::new(self.lambda * r.x, self.lambda * r.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Clockwise,
    Anticlockwise,
}

/// Rotation by `alpha` in the given direction.
///
/// Clockwise is `[[cos α, sin α], [−sin α, cos α]]`; anticlockwise is the same
/// template at `−α`.
pub fn rotation_matrix(alpha: f64, direction: Direction) -> Mat2 {
    let (s, c) = alpha.sin_cos();
    match direction {
        Direction::Clockwise => Mat2::new(c, s, -s, c),
        Direction::Anticlockwise => Mat2::new(c, -s, s, c),
    }
}

/// Matrix angle `γ` with `rotation(α, direction) · reflection(θ) = reflection(γ)`.
///
/// Returns `(θ − α) mod 2π` for clockwise and `(θ + α) mod 2π` for
/// anticlockwise rotation. The result is a matrix angle; the reflection axis is
/// at `γ / 2`.
pub fn compose_rotation_reflection(alpha: f64, theta_mat: f64, direction: Direction) -> f64 {
    match direction {
        Direction::Clockwise => wrap_tau(theta_mat - alpha),
        Direction::Anticlockwise => wrap_tau(theta_mat + alpha),
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    use super::*;

    fn assert_point(got: Point2, want: Point2, eps: f64) {
        assert!(got.distance(&want) <= eps, "got {got:?}, want {want:?}");
    }

    #[test]
    fn reflect_across_x_axis() {
        let axis = AxisLine::new(0.0).unwrap();
        assert_eq!(
            reflect_point(Point2::new(3.0, 7.0), axis),
            Point2::new(3.0, -7.0)
        );
    }

    #[test]
    fn point_on_axis_is_fixed() {
        let axis = AxisLine::new(FRAC_PI_4).unwrap();
        assert_point(
            reflect_point(Point2::new(1.0, 1.0), axis),
            Point2::new(1.0, 1.0),
            1e-15,
        );
    }

    #[test]
    fn reflect_matches_polar_oracle() {
        let axis = AxisLine::new(FRAC_PI_4).unwrap();
        let p = Point2::new(3f64.sqrt(), 1.0);
        let want = Point2::new(1.0, 3f64.sqrt());
        assert_point(reflect_point(p, axis), want, 1e-15);
        assert_point(reflect_point_polar(p, axis).unwrap(), want, 1e-15);
    }

    #[test]
    fn polar_form_outside_wedge() {
        let axis = AxisLine::new(0.2).unwrap();
        assert!(reflect_point_polar(Point2::new(1.0, 1.0), axis).is_none());
        assert!(reflect_point_polar(Point2::new(-1.0, 0.1), axis).is_none());
        assert!(reflect_point_polar(Point2::new(1.0, 0.0), axis).is_none());
    }

    #[test]
    fn apply_examples() {
        let m = ReflectScale::new(0.0, 0.7).unwrap();
        assert_eq!(m.apply(Point2::new(5.0, -2.0)).norm(), 0.0);
        let m = ReflectScale::new(1.0, FRAC_PI_4).unwrap();
        assert_point(m.apply(Point2::new(1.0, 1.0)), Point2::new(1.0, 1.0), 1e-15);
        let m = ReflectScale::new(2.0, 0.0).unwrap();
        assert_eq!(m.apply(Point2::new(3.0, 7.0)), Point2::new(6.0, -14.0));
    }

    #[test]
    fn axis_is_canonical_mod_pi() {
        let a = AxisLine::new(PI + 0.25).unwrap();
        assert!((a.phi() - 0.25).abs() < 1e-15);
        assert!(AxisLine::new(-0.25).unwrap().phi() > 0.0);
        assert!(AxisLine::new(f64::NAN).is_err());
    }

    #[test]
    fn contains_and_perpendicular() {
        let tol = Tolerance::default();
        let axis = AxisLine::new(FRAC_PI_4).unwrap();
        assert!(axis.contains(&Point2::new(2.0, 2.0), tol));
        assert!(axis.contains(&Point2::new(-3.0, -3.0), tol));
        assert!(!axis.contains(&Point2::new(2.0, 2.1), tol));
        assert!(axis.perpendicular().contains(&Point2::new(1.0, -1.0), tol));
    }

    #[test]
    fn matrix_form_agrees_with_core_parametrization() {
        let tol = Tolerance::new(1e-12).unwrap();
        for &(l, phi) in &[(2.0, 0.4), (-1.5, 1.1), (0.3, 2.9), (-4.0, 0.0)] {
            let m = ReflectScale::new(l, phi).unwrap();
            let canon = m.to_trace_zero();
            assert_eq!(canon.lambda(), f64::abs(l));
            assert!(m.matrix().approx_eq(&canon.matrix(), tol));
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotation_matrix(0.0, Direction::Clockwise), Mat2::IDENTITY);
        let cw = rotation_matrix(FRAC_PI_2, Direction::Clockwise) * Point2::new(1.0, 0.0);
        assert_point(cw, Point2::new(0.0, -1.0), 1e-15);
        let acw = rotation_matrix(FRAC_PI_2, Direction::Anticlockwise) * Point2::new(1.0, 0.0);
        assert_point(acw, Point2::new(0.0, 1.0), 1e-15);
        assert!((rotation_matrix(0.8, Direction::Anticlockwise).det() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn compose_examples() {
        for dir in [Direction::Clockwise, Direction::Anticlockwise] {
            assert_eq!(compose_rotation_reflection(0.0, 1.2, dir), 1.2);
        }
        let g = compose_rotation_reflection(FRAC_PI_2, FRAC_PI_2, Direction::Clockwise);
        assert_eq!(g, 0.0);
        assert_eq!(reflection_matrix(g), Mat2::new(1.0, 0.0, 0.0, -1.0));

        let g = compose_rotation_reflection(FRAC_PI_3, FRAC_PI_2, Direction::Anticlockwise);
        assert!((g - 2.617_993_877_991_494_4).abs() < 1e-15);
        // explicit matrix product oracle
        let (s, c) = FRAC_PI_3.sin_cos();
        let rot = Mat2::new(c, -s, s, c);
        let prod = rot * Mat2::new(0.0, 1.0, 1.0, 0.0);
        assert!(prod.max_abs_diff(&reflection_matrix(g)) < 1e-15);
    }
}

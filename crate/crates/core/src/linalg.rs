//! Plane points and 2×2 matrices.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Same point within `tol`, measured against the larger of the two norms.
    pub fn approx_eq(&self, other: &Point2, tol: Tolerance) -> bool {
        self.distance(other) <= tol.scaled(self.norm().max(other.norm()))
    }

    pub fn is_origin(&self, tol: Tolerance) -> bool {
        self.norm() <= tol.eps()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, p: Point2) -> Point2 {
        Point2::new(self * p.x, self * p.y)
    }
}

/// Row-major 2×2 real matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mat2 {
    pub rows: [[f64; 2]; 2],
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);
    pub const ZERO: Mat2 = Mat2::new(0.0, 0.0, 0.0, 0.0);

    #[inline]
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self {
            rows: [[a, b], [c, d]],
        }
    }

    pub const fn from_row_major(v: [f64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub fn to_row_major(&self) -> [f64; 4] {
        let [[a, b], [c, d]] = self.rows;
        [a, b, c, d]
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    pub fn transpose(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.rows;
        Mat2::new(a, c, b, d)
    }

    pub fn trace(&self) -> f64 {
        self.rows[0][0] + self.rows[1][1]
    }

    pub fn det(&self) -> f64 {
        let [[a, b], [c, d]] = self.rows;
        a * d - b * c
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        let [[a, b], [c, d]] = self.rows;
        Mat2::new(s * a, s * b, s * c, s * d)
    }

    pub fn is_finite(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    /// Entrywise comparison with [`Tolerance::close`].
    pub fn approx_eq(&self, other: &Mat2, tol: Tolerance) -> bool {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .all(|(&x, &y)| tol.close(x, y))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let l = self.rows;
        let r = rhs.rows;
        Mat2::new(
            l[0][0] * r[0][0] + l[0][1] * r[1][0],
            l[0][0] * r[0][1] + l[0][1] * r[1][1],
            l[1][0] * r[0][0] + l[1][1] * r[1][0],
            l[1][0] * r[0][1] + l[1][1] * r[1][1],
        )
    }
}

impl Mul<Point2> for Mat2 {
    type Output = Point2;
    fn mul(self, p: Point2) -> Point2 {
        let [[a, b], [c, d]] = self.rows;
        Point2::new(a * p.x + b * p.y, c * p.x + d * p.y)
    }
}

//! Orbits, powers, convergence and stable sets of the scaled reflection map.
//!
//! Everything rests on two facts about `T = λR` with `R` a reflection:
//! `R² = I`, so `Tⁿ` is `λⁿI` for even `n` and `λⁿR` for odd `n`; and `R` is an
//! isometry, so `T` scales every distance by exactly `|λ|`.

use std::collections::BTreeMap;
use std::fmt;

use ordered_float::OrderedFloat;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::ReflectScale;
use crate::linalg::{Mat2, Point2};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cardinality {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Topology {
    Discrete,
    Usual,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Convergence {
    ConvergesTo(Point2),
    NotConvergent,
    DivergesToInfinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceVerdict {
    pub topology: Topology,
    pub verdict: Convergence,
}

/// Set of points forward asymptotic to a given point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum StableSet {
    WholePlane,
    SingletonSelf(Point2),
}

impl StableSet {
    pub fn contains(&self, q: &Point2, tol: Tolerance) -> bool {
        match self {
            StableSet::WholePlane => true,
            StableSet::SingletonSelf(p) => p.approx_eq(q, tol),
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(k) => write!(f, "Finite({k})"),
            Cardinality::Infinite => f.write_str("Infinite"),
        }
    }
}

impl fmt::Display for Convergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convergence::ConvergesTo(p) => write!(f, "ConvergesTo ({}, {})", p.x, p.y),
            Convergence::NotConvergent => f.write_str("NotConvergent"),
            Convergence::DivergesToInfinity => f.write_str("DivergesToInfinity"),
        }
    }
}

impl fmt::Display for StableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StableSet::WholePlane => f.write_str("WholePlane"),
            StableSet::SingletonSelf(p) => write!(f, "SingletonSelf ({}, {})", p.x, p.y),
        }
    }
}

/// First point of an orbit that lands on an earlier one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Revisit {
    pub index: usize,
    pub earlier: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitRecord {
    pub start: Point2,
    pub map: ReflectScale,
    /// `points[n]` is the n-th iterate; `points[0] == start`.
    pub points: Vec<Point2>,
    /// Reported cardinality: the observed one when a revisit was found,
    /// otherwise the analytic classification.
    pub cardinality: Cardinality,
    pub analytic: Cardinality,
    pub revisit: Option<Revisit>,
    /// Number of iterations actually computed. Falls short of the requested
    /// count when the orbit overflows or underflows `f64`.
    pub truncated_at: usize,
}

impl OrbitRecord {
    /// Observed cardinality, if a revisit was detected.
    pub fn empirical(&self) -> Option<Cardinality> {
        self.revisit.map(|r| Cardinality::Finite(r.index))
    }

    /// Whether observation and analysis agree (trivially true without a revisit
    /// when the analysis predicts an infinite orbit).
    pub fn is_consistent(&self) -> bool {
        match self.empirical() {
            Some(e) => e == self.analytic,
            None => match self.analytic {
                Cardinality::Infinite => true,
                Cardinality::Finite(k) => self.points.len() <= k,
            },
        }
    }
}

/// `xⁿ` for a non-negative integer exponent.
pub fn pow_n(x: f64, n: u32) -> f64 {
    match i32::try_from(n) {
        Ok(k) => x.powi(k),
        Err(_) => x.powf(f64::from(n)),
    }
}

/// `n`-fold application of `m`.
pub fn iterate(m: &ReflectScale, p: Point2, n: u32) -> Point2 {
    (0..n).fold(p, |q, _| m.apply(q))
}

/// Closed form of the `n`-th power: `λⁿ·I` for even `n`, `λⁿ·R` for odd `n`.
pub fn power_t(m: &ReflectScale, n: u32) -> Mat2 {
    let scale = pow_n(m.lambda, n);
    if n.is_multiple_of(2) {
        Mat2::IDENTITY.scale(scale)
    } else {
        m.axis.reflection_matrix().scale(scale)
    }
}

/// Whether `(λR)ⁿ` is the identity for every reflection `R`: exactly when `n`
/// is even and `λ = ±1`. The empty power `n = 0` is always the identity.
pub fn is_power_identity(lambda: f64, n: u32, tol: Tolerance) -> bool {
    n == 0 || (n.is_multiple_of(2) && tol.close(lambda.abs(), 1.0))
}

/// Analytic orbit cardinality.
///
/// - origin: `{0}`
/// - `λ = 0`: `{p, 0}`
/// - `λ = 1`: `{p}` on the axis, else `{p, Rp}`
/// - `λ = −1`: `{p}` on the line perpendicular to the axis (where `Rp = −p`),
///   else `{p, −Rp}`
/// - otherwise infinite.
pub fn classify_orbit_cardinality(p: Point2, m: &ReflectScale, tol: Tolerance) -> Cardinality {
    if p.is_origin(tol) {
        return Cardinality::Finite(1);
    }
    let l = m.lambda;
    if tol.is_zero(l) {
        Cardinality::Finite(2)
    } else if tol.close(l, 1.0) {
        Cardinality::Finite(if m.axis.contains(&p, tol) { 1 } else { 2 })
    } else if tol.close(l, -1.0) {
        Cardinality::Finite(if m.axis.perpendicular().contains(&p, tol) {
            1
        } else {
            2
        })
    } else {
        Cardinality::Infinite
    }
}

/// Index of earlier orbit points keyed by norm.
///
/// Two points closer than `eps·max(‖a‖, ‖b‖)` have norms within the same
/// relative band, so only that band of the index needs scanning.
struct RevisitIndex {
    eps: f64,
    by_norm: BTreeMap<OrderedFloat<f64>, Vec<usize>>,
}

impl RevisitIndex {
    fn new(eps: f64) -> Self {
        Self {
            eps,
            by_norm: BTreeMap::new(),
        }
    }

    fn insert(&mut self, idx: usize, p: &Point2) {
        self.by_norm
            .entry(OrderedFloat(p.norm()))
            .or_default()
            .push(idx);
    }

    fn find(&self, p: &Point2, points: &[Point2]) -> Option<usize> {
        let r = p.norm();
        let band = (2.0 * self.eps).min(0.5);
        let lo = OrderedFloat(r * (1.0 - band));
        let hi = OrderedFloat(r / (1.0 - band));
        self.by_norm
            .range(lo..=hi)
            .flat_map(|(_, idxs)| idxs.iter().copied())
            .filter(|&i| {
                let q = &points[i];
                p.distance(q) <= self.eps * r.max(q.norm())
            })
            .min()
    }
}

/// Iterates `m` from `p` up to `max_iter` times, recording every point and the
/// first revisit.
///
/// Points are the same when their distance is at most `eps` times the larger
/// norm. Iteration stops early if a point overflows, or underflows to a
/// subnormal while `λ ≠ 0`, since neither carries information about the orbit.
pub fn orbit(p: Point2, m: &ReflectScale, max_iter: usize, tol: Tolerance) -> Result<OrbitRecord> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("max_iter must be at least 1".into()));
    }
    if !p.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "start point must be finite, got {p:?}"
        )));
    }

    let mut points = Vec::with_capacity(max_iter.min(1 << 20) + 1);
    let mut index = RevisitIndex::new(tol.eps());
    let mut revisit = None;
    points.push(p);
    index.insert(0, &p);

    for n in 1..=max_iter {
        let prev = points[n - 1];
        let next = m.apply(prev);
        if !next.is_finite() {
            break;
        }
        if m.lambda != 0.0 && prev.norm() != 0.0 && next.norm() < f64::MIN_POSITIVE {
            break;
        }
        if revisit.is_none() {
            match index.find(&next, &points) {
                Some(earlier) => revisit = Some(Revisit { index: n, earlier }),
                None => index.insert(n, &next),
            }
        }
        points.push(next);
    }

    let analytic = classify_orbit_cardinality(p, m, tol);
    let cardinality = revisit
        .map(|r| Cardinality::Finite(r.index))
        .unwrap_or(analytic);
    let truncated_at = points.len() - 1;
    Ok(OrbitRecord {
        start: p,
        map: *m,
        points,
        cardinality,
        analytic,
        revisit,
        truncated_at,
    })
}

/// Limit of the iterates of `p`, if the sequence is eventually constant.
fn eventual_constant(p: Point2, m: &ReflectScale, tol: Tolerance) -> Option<Point2> {
    let l = m.lambda;
    if p.is_origin(tol) || tol.is_zero(l) {
        Some(Point2::ORIGIN)
    } else if (tol.close(l, 1.0) && m.axis.contains(&p, tol))
        || (tol.close(l, -1.0) && m.axis.perpendicular().contains(&p, tol))
    {
        Some(p)
    } else {
        None
    }
}

/// Convergence of `{Tⁿ(p)}` in the discrete or the usual topology of the plane.
///
/// Discretely, only eventually constant sequences converge. In the usual
/// topology every `|λ| < 1` sequence also converges to the origin, `|λ| = 1`
/// sequences that are not constant alternate on a circle, and `|λ| > 1`
/// sequences escape to infinity.
pub fn classify_convergence(
    p: Point2,
    m: &ReflectScale,
    topology: Topology,
    tol: Tolerance,
) -> ConvergenceVerdict {
    let eventual = eventual_constant(p, m, tol);
    let verdict = match (topology, eventual) {
        (_, Some(limit)) => Convergence::ConvergesTo(limit),
        (Topology::Discrete, None) => Convergence::NotConvergent,
        (Topology::Usual, None) => {
            let a = m.lambda.abs();
            if tol.close(a, 1.0) {
                Convergence::NotConvergent
            } else if a < 1.0 {
                Convergence::ConvergesTo(Point2::ORIGIN)
            } else {
                Convergence::DivergesToInfinity
            }
        }
    };
    ConvergenceVerdict { topology, verdict }
}

/// `d(Tⁿp, Tⁿq) = |λ|ⁿ·d(p, q)`.
pub fn distance_after_n(p: Point2, q: Point2, lambda: f64, n: u32) -> f64 {
    pow_n(lambda.abs(), n) * p.distance(&q)
}

/// Whether `d(Tⁿp, Tⁿq) → 0`.
pub fn is_forward_asymptotic(p: Point2, q: Point2, lambda: f64, tol: Tolerance) -> bool {
    lambda.abs() < 1.0 || p.approx_eq(&q, tol)
}

/// The whole plane for `|λ| < 1`, only `p` itself otherwise.
pub fn stable_set(p: Point2, lambda: f64) -> StableSet {
    if lambda.abs() < 1.0 {
        StableSet::WholePlane
    } else {
        StableSet::SingletonSelf(p)
    }
}

/// Triangle-inequality bound `(|λ|ⁿ + |λ|ᵐ)·‖p‖` on `d(Tⁿp, Tᵐp)`.
pub fn cauchy_bound(p: Point2, lambda: f64, n: u32, m: u32) -> f64 {
    let a = lambda.abs();
    (pow_n(a, n) + pow_n(a, m)) * p.norm()
}

/// `‖Tⁿp‖ = |λ|ⁿ·‖p‖`.
pub fn distance_to_origin_after_n(p: Point2, lambda: f64, n: u32) -> f64 {
    pow_n(lambda.abs(), n) * p.norm()
}

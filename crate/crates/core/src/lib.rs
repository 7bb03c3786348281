//! Trace-zero symmetric 2×2 matrices and the dynamics of scaled reflections.
//!
//! - [`structure`]: the `(λ, θ)` parametrization and the rotation/reflection
//!   split of O(2).
//! - [`geometry`]: reflections across lines through the origin, the map
//!   `p ↦ λ·reflect(p)`, and rotation∘reflection composition.
//! - [`dynamics`]: powers, orbits, convergence and stable sets of that map.
//! - [`frobenius`]: the trace pairing on n×n symmetric matrices and its
//!   orthogonal complement of the trace-zero subspace.

pub mod dynamics;
pub mod error;
pub mod frobenius;
pub mod geometry;
pub mod linalg;
pub mod structure;
pub mod tolerance;

pub use error::{Error, Result};
pub use linalg::{Mat2, Point2};
pub use tolerance::Tolerance;

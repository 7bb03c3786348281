//! Symmetric n×n matrices under the trace pairing `⟨A, B⟩ = Tr(AB)`.
//!
//! The symmetric matrices orthogonal to every trace-zero symmetric matrix are
//! exactly the scalar matrices `c·Iₙ`. Membership is decided by pairing with a
//! finite basis of the trace-zero subspace, which suffices by bilinearity.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// Dense real symmetric matrix, upper triangle packed row by row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymMatN {
    n: usize,
    packed: Vec<f64>,
}

impl SymMatN {
    pub fn zeros(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            packed: vec![0.0; n * (n + 1) / 2],
        })
    }

    pub fn scalar(n: usize, c: f64) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.set(i, i, c);
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::scalar(n, 1.0)
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        Ok(m)
    }

    /// Reads a full row-major `n×n` array, rejecting asymmetric input.
    pub fn from_row_major(n: usize, entries: &[f64], tol: Tolerance) -> Result<Self> {
        check_dim(n)?;
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "matrix entries must be finite, got {bad}"
            )));
        }
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            for j in i..n {
                let upper = entries[i * n + j];
                let lower = entries[j * n + i];
                if !tol.close(upper, lower) {
                    return Err(Error::NotSymmetric {
                        row: i,
                        col: j,
                        upper,
                        lower,
                    });
                }
                m.set(i, j, 0.5 * (upper + lower));
            }
        }
        Ok(m)
    }

    /// `Eᵢⱼ + Eⱼᵢ` for `i ≠ j`.
    pub fn symmetric_unit(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j || i >= n || j >= n {
            return Err(Error::InvalidArgument(format!(
                "off-diagonal unit needs distinct indices below {n}, got ({i},{j})"
            )));
        }
        let mut m = Self::zeros(n)?;
        m.set(i, j, 1.0);
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Row `i` of the packed upper triangle starts at `i·n − i(i−1)/2`.
    #[inline]
    fn offset(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * (2 * self.n - i - 1) / 2 + j
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.packed[self.offset(i, j)]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let k = self.offset(i, j);
        self.packed[k] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        frobenius_inner(self, self).unwrap_or(0.0).sqrt()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn scale(&self, s: f64) -> SymMatN {
        SymMatN {
            n: self.n,
            packed: self.packed.iter().map(|v| s * v).collect(),
        }
    }

    pub fn add(&self, other: &SymMatN) -> Result<SymMatN> {
        same_dim(self, other)?;
        Ok(SymMatN {
            n: self.n,
            packed: self
                .packed
                .iter()
                .zip(&other.packed)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

impl fmt::Display for SymMatN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidArgument(format!(
            "dimension must be at least 2, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn same_dim(a: &SymMatN, b: &SymMatN) -> Result<()> {
    if a.n == b.n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        })
    }
}

/// `Tr(BA) = Σᵢₖ bᵢₖ·aₖᵢ`.
pub fn frobenius_inner(a: &SymMatN, b: &SymMatN) -> Result<f64> {
    same_dim(a, b)?;
    let n = a.n;
    let mut acc = 0.0;
    for i in 0..n {
        for k in 0..n {
            acc += b.get(i, k) * a.get(k, i);
        }
    }
    Ok(acc)
}

/// Basis of the trace-zero symmetric matrices: `Eᵢᵢ − Eᵢ₊₁,ᵢ₊₁` for
/// `0 ≤ i < n−1`, then `Eᵢⱼ + Eⱼᵢ` for `i < j` in row order.
pub fn sym0_basis(n: usize) -> Result<Vec<SymMatN>> {
    check_dim(n)?;
    let mut basis = Vec::with_capacity(n * (n + 1) / 2 - 1);
    for i in 0..n - 1 {
        let mut m = SymMatN::zeros(n)?;
        m.set(i, i, 1.0);
        m.set(i + 1, i + 1, -1.0);
        basis.push(m);
    }
    for i in 0..n {
        for j in i + 1..n {
            basis.push(SymMatN::symmetric_unit(n, i, j)?);
        }
    }
    Ok(basis)
}

/// `A = c·Iₙ` entrywise, each deviation within `eps·(1 + ‖A‖_F)`.
pub fn is_scalar_matrix(a: &SymMatN, tol: Tolerance) -> bool {
    let thresh = tol.scaled(a.frobenius_norm());
    let c = a.trace() / a.n as f64;
    (0..a.n).all(|i| {
        (i..a.n).all(|j| {
            let want = if i == j { c } else { 0.0 };
            (a.get(i, j) - want).abs() <= thresh
        })
    })
}

/// Outcome of pairing a matrix against the trace-zero basis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum PsymCheck {
    /// Orthogonal to every trace-zero matrix; equal to `scalar·Iₙ`.
    Member { scalar: f64 },
    /// First basis element whose pairing with the matrix does not vanish.
    NonMember { witness: SymMatN, pairing: f64 },
}

/// Pairs `a` with every element of [`sym0_basis`], each pairing tested against
/// `eps·(1 + ‖A‖_F)`.
pub fn psym_check(a: &SymMatN, tol: Tolerance) -> PsymCheck {
    let thresh = tol.scaled(a.frobenius_norm());
    let basis = sym0_basis(a.n).expect("dimension validated on construction");
    for b in basis {
        let pairing = frobenius_inner(a, &b).expect("same dimension");
        if pairing.abs() > thresh {
            return PsymCheck::NonMember {
                witness: b,
                pairing,
            };
        }
    }
    PsymCheck::Member {
        scalar: a.trace() / a.n as f64,
    }
}

pub fn is_in_psym(a: &SymMatN, tol: Tolerance) -> bool {
    matches!(psym_check(a, tol), PsymCheck::Member { .. })
}

/// Gram matrix `Gᵢⱼ = ⟨Mᵢ, Mⱼ⟩`, row-major.
pub fn gram_matrix(mats: &[SymMatN]) -> Result<Vec<Vec<f64>>> {
    let mut g = vec![vec![0.0; mats.len()]; mats.len()];
    for i in 0..mats.len() {
        for j in i..mats.len() {
            let v = frobenius_inner(&mats[i], &mats[j])?;
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    Ok(g)
}

/// Numerical rank by Gaussian elimination with partial pivoting.
///
/// Rows that are already zero in the pivot column are skipped, which keeps the
/// sparse Gram matrices of the unit basis cheap to reduce.
pub fn matrix_rank(mut rows: Vec<Vec<f64>>, rel_tol: f64) -> usize {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let scale = rows.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return 0;
    }
    let thresh = rel_tol * scale;
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let (pivot, best) = (rank..n_rows)
            .map(|r| (r, rows[r][col].abs()))
            .fold((rank, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= thresh {
            continue;
        }
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col] / pivot_row[col];
            if factor == 0.0 {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= factor * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the orthogonal complement of the trace-zero subspace inside
/// the symmetric matrices, `n(n+1)/2 − rank(Gram(basis))`.
///
/// Also confirms that the basis together with `Iₙ` spans all symmetric
/// matrices; a rank deficiency there is reported as an error.
pub fn psym_dimension(n: usize) -> Result<usize> {
    check_dim(n)?;
    let full = n * (n + 1) / 2;
    let mut mats = sym0_basis(n)?;
    let basis_rank = matrix_rank(gram_matrix(&mats)?, 1e-10);
    mats.push(SymMatN::identity(n)?);
    let spanning_rank = matrix_rank(gram_matrix(&mats)?, 1e-10);
    if spanning_rank != full {
        return Err(Error::InvalidArgument(format!(
            "basis plus identity spans dimension {spanning_rank}, expected {full}"
        )));
    }
    Ok(full - basis_rank)
}

//! Circulant matrices and their Fourier eigenstructure.
//!
//! `circ(m_0, ..., m_{n-1})` has eigenvalues `Σ_t m_t ξ^{tl}` with eigenvectors
//! `(1, ξ^l, ξ^{2l}, ...)`, `ξ = exp(2πi/n)`, for every `l` in `0..n`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::graph::IGraphParams;
use crate::{Error, Result};

/// Imaginary parts of symmetric-row eigenvalues above this are treated as a bug.
pub const IMAGINARY_CUTOFF: f64 = 1e-12;

pub type ComplexVector = Vec<Complex64>;

/// First row of an `n x n` circulant matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantRow(Vec<f64>);

impl CirculantRow {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyRow);
        }
        Ok(Self(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[f64] {
        &self.0
    }

    /// `entries[i] == entries[n - i]` for all `i`, i.e. the matrix is symmetric.
    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (1..n).all(|i| self.0[i] == self.0[n - i])
    }

    /// Entry `(r, c)` of the full matrix: `m_{(c - r) mod n}`.
    pub fn entry(&self, r: usize, c: usize) -> f64 {
        let n = self.len();
        self.0[(c + n - r % n) % n]
    }

    /// Product of the full matrix with `v`.
    pub fn apply(&self, v: &[Complex64]) -> Result<ComplexVector> {
        let n = self.len();
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        Ok((0..n)
            .map(|r| (0..n).map(|c| v[c] * self.entry(r, c)).sum())
            .collect())
    }
}

/// `ξ^e` with the exponent reduced mod `n` before taking the angle.
fn root_of_unity(n: usize, exponent: usize) -> Complex64 {
    Complex64::from_polar(1.0, TAU * (exponent % n) as f64 / n as f64)
}

fn check_index(l: usize, n: usize) -> Result<()> {
    if l >= n {
        return Err(Error::IndexOutOfRange { index: l, order: n });
    }
    Ok(())
}

/// `l`-th eigenvalue `Σ_t m_t ξ^{tl}`.
pub fn circulant_eigenvalue(row: &CirculantRow, l: usize) -> Result<Complex64> {
    let n = row.len();
    check_index(l, n)?;
    Ok(row
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0.0)
        .map(|(t, &m)| root_of_unity(n, t * l) * m)
        .sum())
}

/// Real eigenvalue of a symmetric row. Fails if the imaginary residue exceeds
/// [`IMAGINARY_CUTOFF`].
pub fn circulant_eigenvalue_real(row: &CirculantRow, l: usize) -> Result<f64> {
    let z = circulant_eigenvalue(row, l)?;
    if z.im.abs() > IMAGINARY_CUTOFF {
        return Err(Error::NonRealEigenvalue(z.im));
    }
    Ok(z.re)
}

/// `(1, ξ^l, ξ^{2l}, ..., ξ^{(n-1)l})`.
pub fn fourier_vector(n: usize, l: usize) -> Result<ComplexVector> {
    check_index(l, n)?;
    Ok((0..n).map(|t| root_of_unity(n, t * l)).collect())
}

/// Adjacency row of the rim `{i, i + step}`: ones at `step` and `n - step`.
///
/// # Panics
///
/// Panics unless `1 <= step < n/2`.
pub fn rim_row(n: usize, step: usize) -> CirculantRow {
    assert!(
        step >= 1 && 2 * step < n,
        "rim step {step} invalid for n = {n}"
    );
    let mut entries = vec![0.0; n];
    entries[step] = 1.0;
    entries[n - step] = 1.0;
    CirculantRow(entries)
}

fn rim_eigenvalue(n: usize, step: usize, l: usize) -> Result<f64> {
    check_index(l, n)?;
    Ok(2.0 * (TAU * ((step * l) % n) as f64 / n as f64).cos())
}

/// Outer rim eigenvalue `alpha_l = 2cos(2πjl/n)`.
pub fn alpha(params: &IGraphParams, l: usize) -> Result<f64> {
    rim_eigenvalue(params.n(), params.j(), l)
}

/// Inner rim eigenvalue `beta_l = 2cos(2πkl/n)`.
pub fn beta(params: &IGraphParams, l: usize) -> Result<f64> {
    rim_eigenvalue(params.n(), params.k(), l)
}

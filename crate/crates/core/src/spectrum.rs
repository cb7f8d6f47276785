//! Closed-form spectrum and eigenvectors of `I(n, j, k)`.
//!
//! With `v_l` the `l`-th Fourier vector, the block matrix `[[B, I], [I, A]]`
//! maps `(a v_l ; v_l)` to `((a beta_l + 1) v_l ; (a + alpha_l) v_l)`. This is
//! `λ (a v_l ; v_l)` exactly when `a = λ - alpha_l` and
//! `(λ - alpha_l)(λ - beta_l) = 1`, whose two roots are `λ_l±`.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::circulant::{alpha, beta, fourier_vector, ComplexVector};
use crate::graph::IGraphParams;
use crate::Result;

/// Which root of `(λ - alpha)(λ - beta) = 1`; `Plus` is the larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Plus, Branch::Minus];

    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

/// One eigenvalue `λ_l±` together with the rim eigenvalues behind it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralPoint {
    pub l: usize,
    pub branch: Branch,
    pub value: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `value - alpha`, the weight of the inner-rim half of the eigenvector.
    #[serde(rename = "a")]
    pub a_coeff: f64,
}

/// A run of (numerically) equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenGroup {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    #[serde(flatten)]
    pub params: IGraphParams,
    /// All `2n` points, ordered by `l` then `+` before `-`.
    pub points: Vec<SpectralPoint>,
    /// Ascending by value.
    pub groups: Vec<EigenGroup>,
}

impl Spectrum {
    /// Eigenvalues sorted ascending.
    pub fn sorted_values(&self) -> Vec<f64> {
        let mut values: Vec<f64> = self.points.iter().map(|p| p.value).collect();
        values.sort_by(f64::total_cmp);
        values
    }

    pub fn min(&self) -> f64 {
        self.points
            .iter()
            .map(|p| p.value)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.points
            .iter()
            .map(|p| p.value)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// `λ_l` on the given branch.
pub fn eigenvalue(params: &IGraphParams, l: usize, branch: Branch) -> Result<SpectralPoint> {
    let alpha = alpha(params, l)?;
    let beta = beta(params, l)?;
    Ok(point_from_rims(l, branch, alpha, beta))
}

fn point_from_rims(l: usize, branch: Branch, alpha: f64, beta: f64) -> SpectralPoint {
    let gap = alpha - beta;
    let value = 0.5 * (alpha + beta + branch.sign() * (gap * gap + 4.0).sqrt());
    SpectralPoint {
        l,
        branch,
        value,
        alpha,
        beta,
        a_coeff: value - alpha,
    }
}

/// All `2n` eigenvalues, grouped by splitting the sorted values at gaps wider
/// than `gap_tolerance`.
pub fn full_spectrum(params: &IGraphParams, gap_tolerance: f64) -> Spectrum {
    let points: Vec<SpectralPoint> = (0..params.n())
        .flat_map(|l| {
            Branch::BOTH.map(|b| eigenvalue(params, l, b).expect("l < n by construction"))
        })
        .collect();
    let groups = group_values(points.iter().map(|p| p.value), gap_tolerance);
    Spectrum {
        params: *params,
        points,
        groups,
    }
}

/// Spectrum of the generalized Petersen graph `G(n, k) = I(n, 1, k)`.
pub fn gp_spectrum(n: i64, k: i64, gap_tolerance: f64) -> Result<Spectrum> {
    Ok(full_spectrum(&IGraphParams::petersen(n, k)?, gap_tolerance))
}

/// Clusters values whose sorted neighbours differ by at most `gap_tolerance`.
/// Each group reports the mean of its members.
pub fn group_values(values: impl IntoIterator<Item = f64>, gap_tolerance: f64) -> Vec<EigenGroup> {
    let mut sorted: Vec<f64> = values.into_iter().collect();
    sorted.sort_by(f64::total_cmp);
    let mut groups: Vec<EigenGroup> = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] > gap_tolerance {
            let members = &sorted[start..i];
            groups.push(EigenGroup {
                value: members.iter().sum::<f64>() / members.len() as f64,
                multiplicity: members.len(),
            });
            start = i;
        }
    }
    groups
}

/// An eigenvalue with its (unnormalized) eigenvector `(a_l v_l ; v_l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub point: SpectralPoint,
    /// First `n` entries: inner rim (`b_i`), last `n`: outer rim (`a_i`).
    pub vector: ComplexVector,
}

pub fn eigenvector(params: &IGraphParams, l: usize, branch: Branch) -> Result<EigenPair> {
    let point = eigenvalue(params, l, branch)?;
    let v = fourier_vector(params.n(), l)?;
    // sqrt((alpha - beta)^2 + 4) >= 2 keeps the branches apart and a finite.
    debug_assert!(point.a_coeff.is_finite());
    let vector = v
        .iter()
        .map(|z| z * point.a_coeff)
        .chain(v.iter().copied())
        .collect::<Vec<Complex64>>();
    Ok(EigenPair { point, vector })
}

/// `|(λ - beta_l)(λ - alpha_l) - 1|`, recomputing the rim eigenvalues from `params`.
pub fn quadratic_residual(params: &IGraphParams, point: &SpectralPoint) -> Result<f64> {
    let alpha = alpha(params, point.l)?;
    let beta = beta(params, point.l)?;
    Ok(((point.value - beta) * (point.value - alpha) - 1.0).abs())
}

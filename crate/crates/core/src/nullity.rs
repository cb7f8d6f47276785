//! Nullity (multiplicity of the eigenvalue 0).
//!
//! For `I(n, j, 2j)` put `x = cos(2πjl/n)`. Then `beta_l = 2(2x^2 - 1)` and
//!
//! ```text
//! λ_l± = 2x^2 + x - 1 ± sqrt((2x^2 - x - 1)^2 + 1)
//! ```
//!
//! vanishes exactly when `8x^3 - 4x - 1 = 0`, i.e. `x ∈ {-1/2, (1-√5)/4, (1+√5)/4}`.
//! Substituting each root:
//!
//! - `x = -1/2`: `2x^2 + x - 1 = -1` and `2x^2 - x - 1 = 0`, so `λ+ = -1 + 1 = 0`.
//! - `x = (1-√5)/4`: `2x^2 + x - 1 = -√5/2`, `2x^2 - x - 1 = -1/2`, so `λ+ = -√5/2 + √5/2 = 0`.
//! - `x = (1+√5)/4`: `2x^2 + x - 1 = √5/2`, `2x^2 - x - 1 = -1/2`, so `λ- = √5/2 - √5/2 = 0`.
//!
//! The angles `2πjl/n` hitting those cosines are `2π(c/m + r)` with
//! `(m, c)` in `(3, 1), (3, 2)` for `-1/2`, `(10, 3), (10, 7)` for `(1-√5)/4` and
//! `(10, 1), (10, 9)` for `(1+√5)/4`, which gives six integer conditions
//! `m j l = n (c + m r)`, `r >= 0`. Everything below the conditions is integer
//! arithmetic.

use serde::Serialize;

use crate::graph::IGraphParams;
use crate::spectrum::{full_spectrum, Branch, SpectralPoint};
use crate::{Error, Result};

/// Upper edge of the band `(tolerance, AMBIGUOUS_BAND)` that draws a warning
/// in [`nullity_numeric`].
pub const AMBIGUOUS_BAND: f64 = 1e-6;

/// One of the six divisibility conditions `m j l = n (c + m r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroCondition {
    R1,
    R2,
    S1,
    S3,
    S7,
    S9,
}

impl ZeroCondition {
    pub const ALL: [ZeroCondition; 6] = [
        ZeroCondition::R1,
        ZeroCondition::R2,
        ZeroCondition::S1,
        ZeroCondition::S3,
        ZeroCondition::S7,
        ZeroCondition::S9,
    ];

    /// `(m, c)`.
    pub fn constants(self) -> (usize, usize) {
        match self {
            ZeroCondition::R1 => (3, 1),
            ZeroCondition::R2 => (3, 2),
            ZeroCondition::S1 => (10, 1),
            ZeroCondition::S3 => (10, 3),
            ZeroCondition::S7 => (10, 7),
            ZeroCondition::S9 => (10, 9),
        }
    }

    /// The branch of `λ_l` that vanishes when the condition holds.
    pub fn branch(self) -> Branch {
        match self {
            ZeroCondition::S1 | ZeroCondition::S9 => Branch::Minus,
            _ => Branch::Plus,
        }
    }

    /// Value of `cos(2πjl/n)` the condition encodes.
    pub fn cosine(self) -> f64 {
        let sqrt5 = 5f64.sqrt();
        match self {
            ZeroCondition::R1 | ZeroCondition::R2 => -0.5,
            ZeroCondition::S3 | ZeroCondition::S7 => (1.0 - sqrt5) / 4.0,
            ZeroCondition::S1 | ZeroCondition::S9 => (1.0 + sqrt5) / 4.0,
        }
    }

    /// Whether `m j l = n (c + m r)` for some integer `r >= 0`.
    pub fn holds(self, n: usize, j: usize, l: usize) -> bool {
        let (m, c) = self.constants();
        let lhs = (m * j * l) as u128;
        let base = (c * n) as u128;
        lhs >= base && (lhs - base).is_multiple_of((m * n) as u128)
    }

    /// Largest certificate parameter `s` worth testing: `j - 1`, except for
    /// `S9`, where `l = n(9 + 10s)/(10j) <= n - 1` forces `s <= j - 2` once `n < 10j`.
    pub fn max_parameter(self, n: usize, j: usize) -> Option<usize> {
        match self {
            ZeroCondition::S9 if n < 10 * j => j.checked_sub(2),
            _ => j.checked_sub(1),
        }
    }

    /// `l = n (c + m s) / (m j)` if that is an integer.
    pub fn index_for(self, n: usize, j: usize, s: usize) -> Option<usize> {
        let (m, c) = self.constants();
        let numerator = n * (c + m * s);
        numerator.is_multiple_of(m * j).then(|| numerator / (m * j))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZeroIndex {
    pub l: usize,
    pub branch: Branch,
}

fn require_doubled(params: &IGraphParams) -> Result<()> {
    if params.k() != 2 * params.j() {
        return Err(Error::NotDoubledStep {
            j: params.j(),
            k: params.k(),
        });
    }
    Ok(())
}

/// Every `(l, branch)` with `λ_l^branch = 0` in `I(n, j, 2j)`, found by testing
/// the six conditions at each `l`. Sorted by `l`.
pub fn zero_indices_exact(params: &IGraphParams) -> Result<Vec<ZeroIndex>> {
    require_doubled(params)?;
    let (n, j) = (params.n(), params.j());
    let mut out = Vec::new();
    for l in 0..n {
        let mut matched = ZeroCondition::ALL.iter().filter(|c| c.holds(n, j, l));
        if let Some(cond) = matched.next() {
            // the six cosine targets are distinct angles, so at most one matches
            if let Some(other) = matched.next() {
                return Err(Error::Inconsistency(format!(
                    "l = {l} satisfies both {cond:?} and {other:?}"
                )));
            }
            out.push(ZeroIndex {
                l,
                branch: cond.branch(),
            });
        }
    }
    Ok(out)
}

/// The six sets of certificate parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CertificateSets {
    #[serde(rename = "R1")]
    pub r1: Vec<usize>,
    #[serde(rename = "R2")]
    pub r2: Vec<usize>,
    #[serde(rename = "S1")]
    pub s1: Vec<usize>,
    #[serde(rename = "S3")]
    pub s3: Vec<usize>,
    #[serde(rename = "S7")]
    pub s7: Vec<usize>,
    #[serde(rename = "S9")]
    pub s9: Vec<usize>,
}

impl CertificateSets {
    pub fn get(&self, cond: ZeroCondition) -> &[usize] {
        match cond {
            ZeroCondition::R1 => &self.r1,
            ZeroCondition::R2 => &self.r2,
            ZeroCondition::S1 => &self.s1,
            ZeroCondition::S3 => &self.s3,
            ZeroCondition::S7 => &self.s7,
            ZeroCondition::S9 => &self.s9,
        }
    }

    fn get_mut(&mut self, cond: ZeroCondition) -> &mut Vec<usize> {
        match cond {
            ZeroCondition::R1 => &mut self.r1,
            ZeroCondition::R2 => &mut self.r2,
            ZeroCondition::S1 => &mut self.s1,
            ZeroCondition::S3 => &mut self.s3,
            ZeroCondition::S7 => &mut self.s7,
            ZeroCondition::S9 => &mut self.s9,
        }
    }

    pub fn total(&self) -> usize {
        ZeroCondition::ALL.iter().map(|&c| self.get(c).len()).sum()
    }
}

/// Exact nullity of `I(n, j, 2j)` with the parameter sets that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullityCertificate {
    pub eta: usize,
    pub sets: CertificateSets,
    pub zero_indices: Vec<ZeroIndex>,
}

/// Enumerates the six parameter sets `{s : m j | n (c + m s)}` over their
/// ranges and checks that they produce exactly the indices found by
/// [`zero_indices_exact`]. Any disagreement is an [`Error::Inconsistency`].
pub fn nullity_certificate(params: &IGraphParams) -> Result<NullityCertificate> {
    let zero_indices = zero_indices_exact(params)?;
    let (n, j) = (params.n(), params.j());

    let mut sets = CertificateSets::default();
    let mut from_sets = Vec::new();
    for cond in ZeroCondition::ALL {
        let Some(max_s) = cond.max_parameter(n, j) else {
            continue;
        };
        for s in 0..=max_s {
            let Some(l) = cond.index_for(n, j, s) else {
                continue;
            };
            if l >= n {
                return Err(Error::Inconsistency(format!(
                    "{cond:?} parameter {s} maps to index {l} outside 0..{n}"
                )));
            }
            sets.get_mut(cond).push(s);
            from_sets.push(ZeroIndex {
                l,
                branch: cond.branch(),
            });
        }
    }
    from_sets.sort();

    let eta = sets.total();
    if eta != zero_indices.len() || from_sets != zero_indices {
        return Err(Error::Inconsistency(format!(
            "{params}: certificate sets give {eta} zero indices {from_sets:?}, \
             direct search gives {} {zero_indices:?}",
            zero_indices.len()
        )));
    }
    Ok(NullityCertificate {
        eta,
        sets,
        zero_indices,
    })
}

/// Nullity counted from the closed-form eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericNullity {
    pub eta: usize,
    pub zero_indices: Vec<ZeroIndex>,
    /// Points with `tolerance < |λ| < AMBIGUOUS_BAND`; non-empty means the
    /// count depends on the tolerance.
    pub ambiguous: Vec<SpectralPoint>,
}

/// Counts `(l, branch)` with `|λ_l^branch| <= tolerance`. Works for any `k`.
pub fn nullity_numeric(params: &IGraphParams, tolerance: f64) -> NumericNullity {
    let spectrum = full_spectrum(params, tolerance);
    let mut zero_indices = Vec::new();
    let mut ambiguous = Vec::new();
    for point in spectrum.points {
        let size = point.value.abs();
        if size <= tolerance {
            zero_indices.push(ZeroIndex {
                l: point.l,
                branch: point.branch,
            });
        } else if size < AMBIGUOUS_BAND {
            ambiguous.push(point);
        }
    }
    NumericNullity {
        eta: zero_indices.len(),
        zero_indices,
        ambiguous,
    }
}

/// `eta <= n + 1`; `None` for disconnected graphs, where the bound is not claimed.
pub fn rowlinson_bound_holds(params: &IGraphParams, eta: usize) -> Option<bool> {
    (params.gcd() == 1).then_some(eta <= params.n() + 1)
}

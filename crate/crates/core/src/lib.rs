//! Closed-form adjacency spectra of I-graphs.
//!
//! An I-graph `I(n, j, k)` is the cubic graph on `2n` vertices `a_0..a_{n-1}`,
//! `b_0..b_{n-1}` with edges `{a_i, a_{i+j}}`, `{a_i, b_i}` and `{b_i, b_{i+k}}`
//! (indices mod `n`). Its adjacency matrix is a 2x2 block of circulants, so the
//! whole spectrum comes from the rim eigenvalues `alpha_l = 2cos(2πjl/n)` and
//! `beta_l = 2cos(2πkl/n)`:
//!
//! ```text
//! λ_l± = (alpha_l + beta_l ± sqrt((alpha_l - beta_l)^2 + 4)) / 2,   0 <= l < n
//! ```
//!
//! Modules:
//!
//! - [`graph`]: parameter canonicalization, adjacency assembly, rim cycles, DOT export.
//! - [`circulant`]: circulant rows, Fourier vectors, rim eigenvalues.
//! - [`spectrum`]: closed-form eigenvalues, eigenvectors and multiplicity groups.
//! - [`structure`]: connectedness and bipartiteness, arithmetic and spectral.
//! - [`nullity`]: exact zero-eigenvalue certificates for `I(n, j, 2j)`.
//! - [`oracle`]: brute-force verifiers sharing no code with the closed forms.
//!
//! ```
//! use igraph_spectrum::{graph::IGraphParams, spectrum::full_spectrum, DEFAULT_TOLERANCE};
//!
//! let petersen = IGraphParams::new(5, 1, 2).unwrap();
//! let spec = full_spectrum(&petersen, DEFAULT_TOLERANCE);
//! let groups: Vec<_> = spec.groups.iter().map(|g| g.multiplicity).collect();
//! assert_eq!(groups, vec![4, 5, 1]);
//! ```

pub mod circulant;
pub mod error;
pub mod graph;
pub mod nullity;
pub mod oracle;
pub mod spectrum;
pub mod structure;

pub use error::{Error, Result};

/// Default tolerance for comparing floating-point eigenvalues.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

//! Connectedness and bipartiteness, both from arithmetic criteria on
//! `(n, j, k)` and from the spectrum, with the BFS oracles reported alongside.

use serde::Serialize;

use crate::graph::{build_adjacency, IGraphParams};
use crate::oracle::{bfs_components, two_coloring};
use crate::spectrum::{full_spectrum, Spectrum};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// `gcd(n, j, k) == 1`.
    pub connected: bool,
    /// Components counted by BFS on the assembled graph.
    pub component_count: usize,
    /// Multiplicity of the eigenvalue 3 in the closed-form spectrum.
    pub mult_of_3: usize,
    /// Two-colouring oracle.
    pub bipartite: bool,
    /// Spectrum equals its own negation.
    pub spectrum_symmetric: bool,
    pub gcd_njk: usize,
    /// Parity criterion; `None` when the graph is disconnected and the
    /// criterion does not apply.
    pub bipartite_parity: Option<bool>,
}

/// Builds the full report; `tolerance` governs the spectral comparisons.
pub fn structure_report(params: &IGraphParams, tolerance: f64) -> StructureReport {
    let spectrum = full_spectrum(params, tolerance);
    let adjacency = build_adjacency(params);
    StructureReport {
        connected: is_connected_gcd(params),
        component_count: bfs_components(&adjacency),
        mult_of_3: multiplicity_of_three(&spectrum, tolerance),
        bipartite: two_coloring(&adjacency),
        spectrum_symmetric: is_bipartite_spectral(&spectrum, tolerance),
        gcd_njk: params.gcd(),
        bipartite_parity: is_bipartite_parity(params),
    }
}

pub fn is_connected_gcd(params: &IGraphParams) -> bool {
    params.gcd() == 1
}

/// Number of eigenvalues within `tolerance` of 3; equals the number of components.
pub fn multiplicity_of_three(spectrum: &Spectrum, tolerance: f64) -> usize {
    spectrum
        .points
        .iter()
        .filter(|p| (p.value - 3.0).abs() <= tolerance)
        .count()
}

/// Whether the sorted eigenvalues match their negation pairwise within `tolerance`.
pub fn is_bipartite_spectral(spectrum: &Spectrum, tolerance: f64) -> bool {
    let values = spectrum.sorted_values();
    values
        .iter()
        .zip(values.iter().rev())
        .all(|(lo, hi)| (lo + hi).abs() <= tolerance)
}

/// `n` even and `j`, `k` odd, for connected graphs. `None` when
/// `gcd(n, j, k) > 1`: e.g. `I(12, 2, 2)` is bipartite with even steps.
pub fn is_bipartite_parity(params: &IGraphParams) -> Option<bool> {
    if !is_connected_gcd(params) {
        return None;
    }
    Some(params.n().is_multiple_of(2) && params.j() % 2 == 1 && params.k() % 2 == 1)
}

/// Index `l'` with `λ_l+ + λ_{l'}- = 0`: shifting by `n/2` negates both rim
/// eigenvalues when `j` and `k` are odd.
pub fn symmetry_pairing(params: &IGraphParams, l: usize) -> Result<usize> {
    let (n, j, k) = (params.n(), params.j(), params.k());
    if n % 2 != 0 || j % 2 == 0 || k % 2 == 0 {
        return Err(Error::PairingUndefined { n, j, k });
    }
    if l >= n {
        return Err(Error::IndexOutOfRange { index: l, order: n });
    }
    Ok(if l <= n / 2 { n / 2 - l } else { 3 * n / 2 - l })
}

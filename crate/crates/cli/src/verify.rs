//! Closed form against brute force over a parameter range.

use igraph_spectrum::graph::{build_adjacency, IGraphParams};
use igraph_spectrum::nullity::{
    nullity_certificate, nullity_numeric, rowlinson_bound_holds, AMBIGUOUS_BAND,
};
use igraph_spectrum::oracle::{
    bfs_components, eigenvalues_bruteforce, residual, two_coloring, DenseSymmetricMatrix,
};
use igraph_spectrum::spectrum::{eigenvector, full_spectrum, quadratic_residual};
use igraph_spectrum::structure::{
    is_bipartite_parity, is_bipartite_spectral, is_connected_gcd, multiplicity_of_three,
};
use igraph_spectrum::Error;
use rayon::prelude::*;
use serde::Serialize;

/// Relative eigenvector residual bound, `‖Aw - λw‖∞ / (1 + |λ|)`.
pub const EIGENVECTOR_RESIDUAL_BOUND: f64 = 1e-9;
pub const QUADRATIC_RESIDUAL_BOUND: f64 = 1e-9;

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub instances: usize,
    pub max_spectrum_deviation: f64,
    pub max_eigenvector_residual: f64,
    pub max_quadratic_residual: f64,
    pub failures: Vec<String>,
    pub inconsistencies: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Default)]
struct InstanceOutcome {
    spectrum_deviation: f64,
    eigenvector_residual: f64,
    quadratic_residual: f64,
    failures: Vec<String>,
    inconsistencies: Vec<String>,
}

/// Runs every check on every instance. `perturb` is added to the closed-form
/// eigenvalues before they are compared, which lets tests simulate a broken build.
pub fn run(instances: &[IGraphParams], tolerance: f64, perturb: f64) -> VerifyReport {
    let outcomes: Vec<InstanceOutcome> = instances
        .par_iter()
        .map(|params| check_instance(params, tolerance, perturb))
        .collect();

    let mut report = VerifyReport {
        instances: instances.len(),
        ..VerifyReport::default()
    };
    for outcome in outcomes {
        report.max_spectrum_deviation = report
            .max_spectrum_deviation
            .max(outcome.spectrum_deviation);
        report.max_eigenvector_residual = report
            .max_eigenvector_residual
            .max(outcome.eigenvector_residual);
        report.max_quadratic_residual = report
            .max_quadratic_residual
            .max(outcome.quadratic_residual);
        report.failures.extend(outcome.failures);
        report.inconsistencies.extend(outcome.inconsistencies);
    }
    report.passed = report.failures.is_empty() && report.inconsistencies.is_empty();
    report
}

fn check_instance(params: &IGraphParams, tolerance: f64, perturb: f64) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    let mut spectrum = full_spectrum(params, tolerance);
    for point in &mut spectrum.points {
        point.value += perturb;
    }
    let adjacency = build_adjacency(params);

    let dense = match eigenvalues_bruteforce(&DenseSymmetricMatrix::from_adjacency(&adjacency)) {
        Ok(values) => values,
        Err(err) => {
            out.failures
                .push(format!("{params}: oracle eigensolver failed: {err}"));
            return out;
        }
    };
    out.spectrum_deviation = spectrum
        .sorted_values()
        .iter()
        .zip(&dense)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if out.spectrum_deviation > tolerance {
        out.failures.push(format!(
            "{params}: closed-form spectrum deviates from oracle by {:e}",
            out.spectrum_deviation
        ));
    }

    for point in &spectrum.points {
        let mut pair = eigenvector(params, point.l, point.branch).expect("l < n");
        pair.point.value = point.value;
        let relative =
            residual(&adjacency, &pair).expect("orders agree") / (1.0 + point.value.abs());
        out.eigenvector_residual = out.eigenvector_residual.max(relative);
        let quad = quadratic_residual(params, point).expect("l < n");
        out.quadratic_residual = out.quadratic_residual.max(quad);
    }
    if out.eigenvector_residual > EIGENVECTOR_RESIDUAL_BOUND {
        out.failures.push(format!(
            "{params}: eigenvector residual {:e}",
            out.eigenvector_residual
        ));
    }
    if out.quadratic_residual > QUADRATIC_RESIDUAL_BOUND {
        out.failures.push(format!(
            "{params}: quadratic residual {:e}",
            out.quadratic_residual
        ));
    }

    let components = bfs_components(&adjacency);
    let mult3 = multiplicity_of_three(&spectrum, tolerance);
    let connected = is_connected_gcd(params);
    if connected != (components == 1) || components != mult3 {
        out.failures.push(format!(
            "{params}: gcd connected = {connected}, BFS components = {components}, multiplicity of 3 = {mult3}"
        ));
    }

    let colorable = two_coloring(&adjacency);
    let symmetric = is_bipartite_spectral(&spectrum, tolerance);
    if colorable != symmetric {
        out.failures.push(format!(
            "{params}: two-colouring says {colorable}, spectral symmetry says {symmetric}"
        ));
    }
    if let Some(parity) = is_bipartite_parity(params) {
        if parity != colorable {
            out.failures.push(format!(
                "{params}: parity criterion says {parity}, two-colouring says {colorable}"
            ));
        }
    }

    let oracle_eta = dense.iter().filter(|x| x.abs() <= AMBIGUOUS_BAND).count();
    let numeric_eta = spectrum
        .points
        .iter()
        .filter(|p| p.value.abs() <= tolerance)
        .count();
    if perturb == 0.0 {
        debug_assert_eq!(numeric_eta, nullity_numeric(params, tolerance).eta);
    }
    if numeric_eta != oracle_eta {
        out.failures.push(format!(
            "{params}: closed-form nullity {numeric_eta}, oracle nullity {oracle_eta}"
        ));
    }
    if params.k() == 2 * params.j() {
        match nullity_certificate(params) {
            Ok(cert) if cert.eta != numeric_eta => out.failures.push(format!(
                "{params}: certificate nullity {}, closed-form nullity {numeric_eta}",
                cert.eta
            )),
            Ok(_) => {}
            Err(Error::Inconsistency(msg)) => out.inconsistencies.push(msg),
            Err(err) => out.failures.push(format!("{params}: {err}")),
        }
    }
    if rowlinson_bound_holds(params, oracle_eta) == Some(false) {
        out.failures
            .push(format!("{params}: nullity {oracle_eta} exceeds n + 1"));
    }
    out
}

//! Brute-force verifiers.
//!
//! Nothing here calls into the closed-form modules: the eigensolver is a
//! cyclic Jacobi iteration on the explicit matrix and the combinatorial checks
//! walk the adjacency matrix directly.

use std::collections::VecDeque;

use num_complex::Complex64;

use crate::graph::AdjacencyMatrix;
use crate::spectrum::EigenPair;
use crate::{Error, Result};

/// Jacobi stops once every off-diagonal entry is at most this times the Frobenius norm.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
/// Full sweeps allowed before giving up.
pub const MAX_SWEEPS: usize = 100;
/// Largest order accepted by [`eigenvalues_bruteforce`].
pub const MAX_ORDER: usize = 4096;

/// Real symmetric matrix, stored in full row-major form.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    /// Builds the matrix from its upper triangle: `upper(r, c)` is called for
    /// `r <= c` and mirrored, so the result is exactly symmetric.
    pub fn from_upper(order: usize, mut upper: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; order * order];
        for r in 0..order {
            for c in r..order {
                let x = upper(r, c);
                entries[r * order + c] = x;
                entries[c * order + r] = x;
            }
        }
        Self { order, entries }
    }

    pub fn from_adjacency(adjacency: &AdjacencyMatrix) -> Self {
        Self::from_upper(adjacency.order(), |r, c| f64::from(adjacency.get(r, c)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.entries[r * self.order + c]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// All eigenvalues, ascending, by cyclic Jacobi rotations.
///
/// Each rotation zeroes one off-diagonal pair `(p, q)`; sweeps over all pairs
/// repeat until the largest off-diagonal magnitude drops to
/// [`OFF_DIAGONAL_TOLERANCE`] times the Frobenius norm.
pub fn eigenvalues_bruteforce(matrix: &DenseSymmetricMatrix) -> Result<Vec<f64>> {
    let n = matrix.order;
    if n > MAX_ORDER {
        return Err(Error::IndexOutOfRange {
            index: n,
            order: MAX_ORDER,
        });
    }
    let mut a = matrix.entries.clone();
    let threshold = OFF_DIAGONAL_TOLERANCE * matrix.frobenius_norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let max_off = (0..n)
            .flat_map(|r| (r + 1..n).map(move |c| (r, c)))
            .map(|(r, c)| a[r * n + c].abs())
            .fold(0.0, f64::max);
        if max_off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= threshold {
                    continue;
                }
                rotate(&mut a, n, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Applies the Jacobi rotation that annihilates `a[p][q]`, keeping `a` symmetric.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let apq = a[p * n + q];

    // tan of the rotation angle, smaller root for stability
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // rows p and q are contiguous; the mirrored columns are written afterwards
    let (head, tail) = a.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for k in 0..n {
        let akp = row_p[k];
        let akq = row_q[k];
        row_p[k] = c * akp - s * akq;
        row_q[k] = s * akp + c * akq;
    }
    for k in 0..n {
        if k != p && k != q {
            a[k * n + p] = a[p * n + k];
            a[k * n + q] = a[q * n + k];
        }
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// Number of connected components, by breadth-first search.
pub fn bfs_components(adjacency: &AdjacencyMatrix) -> usize {
    let n = adjacency.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for v in adjacency.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    components
}

/// Whether the graph has a proper 2-colouring (BFS layering, fails on the
/// first edge inside a layer).
pub fn two_coloring(adjacency: &AdjacencyMatrix) -> bool {
    let n = adjacency.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are coloured");
            for v in adjacency.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// `‖A w - λ w‖∞` for the pair's vector and eigenvalue.
pub fn residual(adjacency: &AdjacencyMatrix, pair: &EigenPair) -> Result<f64> {
    let n = adjacency.order();
    let w = &pair.vector;
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: w.len(),
        });
    }
    let lambda = pair.point.value;
    Ok((0..n)
        .map(|r| {
            let aw: Complex64 = adjacency.neighbors(r).map(|c| w[c]).sum();
            (aw - w[r] * lambda).norm()
        })
        .fold(0.0, f64::max))
}

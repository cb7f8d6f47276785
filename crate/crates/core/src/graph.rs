//! I-graph parameters, adjacency assembly and rim cycle structure.
//!
//! Vertex labelling: `b_i` (inner rim, step `k`) is index `i`, `a_i` (outer
//! rim, step `j`) is index `n + i`. With that order the adjacency matrix is
//! the block matrix `[[B, I], [I, A]]` where `B` and `A` are the rim
//! circulants.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::{gcd, Error, Result};

/// Canonical parameters of `I(n, j, k)`: `n >= 3` and `1 <= j <= k < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IGraphParams {
    n: usize,
    j: usize,
    k: usize,
}

impl IGraphParams {
    /// Validates raw parameters and maps them to the canonical representative
    /// of their isomorphism class.
    ///
    /// Each step `x` is replaced by `min(x mod n, n - x mod n)` and the pair is
    /// ordered so that `j <= k`. A step that reduces to `0` or `n/2` does not give
    /// a simple cubic graph and is rejected.
    pub fn new(n: i64, j: i64, k: i64) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall(n));
        }
        let order = n as usize;
        let j = reduce_step(order, j)?;
        let k = reduce_step(order, k)?;
        let (j, k) = if j <= k { (j, k) } else { (k, j) };
        Ok(Self { n: order, j, k })
    }

    /// Generalized Petersen graph `G(n, k) = I(n, 1, k)`.
    pub fn petersen(n: i64, k: i64) -> Result<Self> {
        Self::new(n, 1, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Outer rim step.
    pub fn j(&self) -> usize {
        self.j
    }

    /// Inner rim step.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices, `2n`.
    pub fn order(&self) -> usize {
        2 * self.n
    }

    pub fn gcd(&self) -> usize {
        gcd(gcd(self.n, self.j), self.k)
    }

    /// Every canonical parameter triple with the given order.
    pub fn enumerate(n: usize) -> impl Iterator<Item = IGraphParams> {
        let max_step = (n.saturating_sub(1)) / 2;
        (1..=max_step).flat_map(move |j| (j..=max_step).map(move |k| IGraphParams { n, j, k }))
    }
}

impl fmt::Display for IGraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({},{},{})", self.n, self.j, self.k)
    }
}

fn reduce_step(n: usize, step: i64) -> Result<usize> {
    let residue = step.rem_euclid(n as i64) as usize;
    let reduced = residue.min(n - residue);
    if reduced == 0 || 2 * reduced == n {
        return Err(Error::NonSimpleStep { n, step, reduced });
    }
    Ok(reduced)
}

/// A vertex of `I(n, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    /// `a_i`, on the outer rim (step `j`).
    Outer(usize),
    /// `b_i`, on the inner rim (step `k`).
    Inner(usize),
}

impl Vertex {
    pub fn index(self, n: usize) -> usize {
        match self {
            Vertex::Inner(i) => i,
            Vertex::Outer(i) => n + i,
        }
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        if index < n {
            Vertex::Inner(index)
        } else {
            Vertex::Outer(index - n)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Outer(i) => write!(f, "a{i}"),
            Vertex::Inner(i) => write!(f, "b{i}"),
        }
    }
}

/// Dense symmetric 0/1 adjacency matrix of a simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    order: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    /// Builds a matrix from undirected edges. Loops and repeated edges are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut entries = vec![0u8; order * order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    order,
                });
            }
            if u == v {
                return Err(Error::MalformedMatrix(format!("loop at vertex {u}")));
            }
            if entries[u * order + v] != 0 {
                return Err(Error::MalformedMatrix(format!(
                    "repeated edge {{{u}, {v}}}"
                )));
            }
            entries[u * order + v] = 1;
            entries[v * order + u] = 1;
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn neighbors(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(vertex)
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(c, _)| c)
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.row(vertex).iter().filter(|&&x| x != 0).count()
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Plain-text grid: one row per line, entries separated by single spaces.
    pub fn to_grid(&self) -> String {
        let mut out = String::with_capacity(self.order * self.order * 2);
        for r in 0..self.order {
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    out.push(' ');
                }
                out.push(if *x != 0 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`AdjacencyMatrix::to_grid`]. The matrix must be
    /// square, 0/1, symmetric and loop-free.
    pub fn from_grid(text: &str) -> Result<Self> {
        let rows: Vec<Vec<u8>> = text
            .lines()
            .filter(|line| !line.trim().is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| match tok {
                        "0" => Ok(0),
                        "1" => Ok(1),
                        other => Err(Error::MalformedMatrix(format!("bad entry {other:?}"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<_>>()?;
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::DimensionMismatch {
                expected: order,
                got: bad.len(),
            });
        }
        let entries: Vec<u8> = rows.into_iter().flatten().collect();
        for r in 0..order {
            if entries[r * order + r] != 0 {
                return Err(Error::MalformedMatrix(format!("loop at vertex {r}")));
            }
            for c in 0..r {
                if entries[r * order + c] != entries[c * order + r] {
                    return Err(Error::MalformedMatrix(format!("asymmetric at ({r}, {c})")));
                }
            }
        }
        Ok(Self { order, entries })
    }
}

/// The `3n` edges of `I(n, j, k)` as vertex-index pairs `(u, v)`, `u < v`.
///
/// Order: inner rim edges `{b_i, b_{i+k}}`, spokes `{b_i, a_i}`, then outer rim
/// edges `{a_i, a_{i+j}}`, each for `i = 0..n`.
pub fn edge_list(params: &IGraphParams) -> Vec<(usize, usize)> {
    let n = params.n;
    let ordered = |u: usize, v: usize| if u < v { (u, v) } else { (v, u) };
    let inner = (0..n).map(|i| ordered(i, (i + params.k) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    let outer = (0..n).map(|i| ordered(n + i, n + (i + params.j) % n));
    inner.chain(spokes).chain(outer).collect()
}

/// Assembles the `2n x 2n` adjacency matrix `[[B, I], [I, A]]`.
pub fn build_adjacency(params: &IGraphParams) -> AdjacencyMatrix {
    let n = params.n;
    let order = 2 * n;
    let mut entries = vec![0u8; order * order];
    let mut set = |r: usize, c: usize| {
        entries[r * order + c] = 1;
        entries[c * order + r] = 1;
    };
    for i in 0..n {
        set(i, (i + params.k) % n);
        set(n + i, n + (i + params.j) % n);
        set(i, n + i);
    }
    AdjacencyMatrix { order, entries }
}

/// Components of the circulant graph on `n` vertices with edges `{i, i + step}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub component_count: usize,
    pub cycle_length: usize,
    /// Each cycle listed in walk order starting from its smallest vertex.
    pub components: Vec<Vec<usize>>,
}

/// Splits a rim into its cycles: `gcd(n, step)` cycles of length `n / gcd(n, step)`.
///
/// # Panics
///
/// Panics unless `1 <= step < n/2`.
pub fn subgraph_cycles(n: usize, step: usize) -> CycleDecomposition {
    assert!(
        step >= 1 && 2 * step < n,
        "rim step {step} invalid for n = {n}"
    );
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = (v + step) % n;
        }
        components.push(cycle);
    }
    let cycle_length = components[0].len();
    debug_assert!(components.iter().all(|c| c.len() == cycle_length));
    CycleDecomposition {
        component_count: components.len(),
        cycle_length,
        components,
    }
}

/// Graphviz description of `I(n, j, k)` with vertices named `b0..` and `a0..`.
pub fn to_dot(params: &IGraphParams) -> String {
    let n = params.n;
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{params}\" {{");
    for i in 0..n {
        let _ = writeln!(out, "  b{i};");
    }
    for i in 0..n {
        let _ = writeln!(out, "  a{i};");
    }
    for (u, v) in edge_list(params) {
        let _ = writeln!(
            out,
            "  {} -- {};",
            Vertex::from_index(u, n),
            Vertex::from_index(v, n)
        );
    }
    out.push_str("}\n");
    out
}

//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p igraph-spectrum --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use igraph_spectrum::circulant::{circulant_eigenvalue_real, CirculantRow};
use igraph_spectrum::graph::{build_adjacency, subgraph_cycles, AdjacencyMatrix, IGraphParams};
use igraph_spectrum::nullity::{
    nullity_certificate, nullity_numeric, rowlinson_bound_holds, ZeroIndex,
};
use igraph_spectrum::oracle::{
    bfs_components, eigenvalues_bruteforce, residual, two_coloring, DenseSymmetricMatrix,
};
use igraph_spectrum::spectrum::{eigenvector, full_spectrum, quadratic_residual, Branch, Spectrum};
use igraph_spectrum::structure::{
    is_bipartite_parity, is_bipartite_spectral, is_connected_gcd, multiplicity_of_three,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SPECTRUM_TOL: f64 = 1e-8;
const EIGENVECTOR_TOL: f64 = 1e-9;
const QUADRATIC_TOL: f64 = 1e-9;
const THREE_TOL: f64 = 1e-8;
const SYMMETRY_TOL: f64 = 1e-8;
const ORACLE_ZERO_TOL: f64 = 1e-6;
const CIRCULANT_TOL: f64 = 1e-9;
const CIRCULANT_SEED: u64 = 0x6a09_e667_f3bc_c908;

/// Everything computed once per instance and shared across criteria.
struct Instance {
    params: IGraphParams,
    adjacency: AdjacencyMatrix,
    spectrum: Spectrum,
    dense: Vec<f64>,
}

impl Instance {
    fn new(params: IGraphParams) -> Self {
        let adjacency = build_adjacency(&params);
        let dense = eigenvalues_bruteforce(&DenseSymmetricMatrix::from_adjacency(&adjacency))
            .expect("oracle converges on 0/1 matrices");
        Self {
            params,
            spectrum: full_spectrum(&params, SPECTRUM_TOL),
            adjacency,
            dense,
        }
    }

    fn oracle_nullity(&self) -> usize {
        self.dense
            .iter()
            .filter(|x| x.abs() <= ORACLE_ZERO_TOL)
            .count()
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn closed_form_vs_oracle(sweep: &[Instance]) -> Outcome {
    let mut worst: f64 = 0.0;
    for inst in sweep {
        let closed = inst.spectrum.sorted_values();
        ensure(closed.len() == inst.dense.len(), || {
            format!("{}: length mismatch", inst.params)
        })?;
        let dev = closed
            .iter()
            .zip(&inst.dense)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        ensure(dev <= SPECTRUM_TOL, || {
            format!("{}: deviation {dev:e}", inst.params)
        })?;
        worst = worst.max(dev);
    }
    Ok(format!(
        "{} instances, max deviation {worst:e} <= {SPECTRUM_TOL:e}",
        sweep.len()
    ))
}

fn eigenvector_residuals(sweep: &[Instance]) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut pairs = 0;
    for inst in sweep {
        for l in 0..inst.params.n() {
            for branch in Branch::BOTH {
                let pair = eigenvector(&inst.params, l, branch).map_err(|e| e.to_string())?;
                let rel = residual(&inst.adjacency, &pair).map_err(|e| e.to_string())?
                    / (1.0 + pair.point.value.abs());
                ensure(rel <= EIGENVECTOR_TOL, || {
                    format!("{} l={l}{branch}: {rel:e}", inst.params)
                })?;
                worst = worst.max(rel);
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} eigenpairs, max relative residual {worst:e} <= {EIGENVECTOR_TOL:e}"
    ))
}

fn quadratic_identity(sweep: &[Instance]) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for inst in sweep {
        for point in &inst.spectrum.points {
            let r = quadratic_residual(&inst.params, point).map_err(|e| e.to_string())?;
            ensure(r <= QUADRATIC_TOL, || {
                format!("{} l={}{}: {r:e}", inst.params, point.l, point.branch)
            })?;
            worst = worst.max(r);
            points += 1;
        }
    }
    Ok(format!(
        "{points} points, max |(λ-α)(λ-β)-1| {worst:e} <= {QUADRATIC_TOL:e}"
    ))
}

fn connectedness(sweep: &[Instance]) -> Outcome {
    let mut disconnected = 0;
    for inst in sweep {
        let by_gcd = is_connected_gcd(&inst.params);
        let components = bfs_components(&inst.adjacency);
        let mult3 = multiplicity_of_three(&inst.spectrum, THREE_TOL);
        ensure(
            by_gcd == (components == 1) && (components == 1) == (mult3 == 1),
            || {
                format!(
                    "{}: gcd={by_gcd} bfs={components} mult3={mult3}",
                    inst.params
                )
            },
        )?;
        ensure(components == mult3, || {
            format!(
                "{}: {components} components but eigenvalue 3 has multiplicity {mult3}",
                inst.params
            )
        })?;
        if !by_gcd {
            disconnected += 1;
        }
    }
    Ok(format!(
        "{} instances ({disconnected} disconnected), gcd = BFS = mult(3)",
        sweep.len()
    ))
}

fn bipartiteness(sweep: &[Instance]) -> Outcome {
    let mut bipartite = 0;
    for inst in sweep {
        let colorable = two_coloring(&inst.adjacency);
        let symmetric = is_bipartite_spectral(&inst.spectrum, SYMMETRY_TOL);
        ensure(colorable == symmetric, || {
            format!(
                "{}: colouring={colorable} spectral={symmetric}",
                inst.params
            )
        })?;
        if let Some(parity) = is_bipartite_parity(&inst.params) {
            ensure(parity == colorable, || {
                format!("{}: parity={parity} colouring={colorable}", inst.params)
            })?;
        }
        if colorable {
            bipartite += 1;
        }
    }
    let i_12_2_2 = sweep
        .iter()
        .find(|i| (i.params.n(), i.params.j(), i.params.k()) == (12, 2, 2))
        .ok_or("I(12,2,2) missing from sweep")?;
    ensure(
        !is_connected_gcd(&i_12_2_2.params)
            && two_coloring(&i_12_2_2.adjacency)
            && is_bipartite_spectral(&i_12_2_2.spectrum, SYMMETRY_TOL)
            && is_bipartite_parity(&i_12_2_2.params).is_none(),
        || "I(12,2,2) should be disconnected and bipartite".into(),
    )?;
    Ok(format!(
        "{} instances ({bipartite} bipartite); I(12,2,2) disconnected and bipartite",
        sweep.len()
    ))
}

fn worked_nullity_examples() -> Outcome {
    let check = |n: i64, j: i64, want: usize| -> Result<Vec<ZeroIndex>, String> {
        let g = IGraphParams::new(n, j, 2 * j).map_err(|e| e.to_string())?;
        let cert = nullity_certificate(&g).map_err(|e| e.to_string())?;
        let oracle = Instance::new(g).oracle_nullity();
        ensure(
            cert.eta == want
                && cert.sets.total() == want
                && cert.zero_indices.len() == want
                && oracle == want,
            || {
                format!(
                    "{g}: eta {} sets {} indices {} oracle {oracle}, want {want}",
                    cert.eta,
                    cert.sets.total(),
                    cert.zero_indices.len()
                )
            },
        )?;
        Ok(cert.zero_indices)
    };
    let first = check(30, 2, 4)?;
    let want: Vec<ZeroIndex> = [5, 10, 20, 25]
        .iter()
        .map(|&l| ZeroIndex {
            l,
            branch: Branch::Plus,
        })
        .collect();
    ensure(first == want, || format!("I(30,2,4) indices {first:?}"))?;
    let second = check(30, 7, 6)?;
    let listed: Vec<String> = second
        .iter()
        .map(|z| format!("{}{}", z.l, z.branch))
        .collect();
    Ok(format!(
        "eta(I(30,2,4)) = 4 at 5+,10+,20+,25+; eta(I(30,7,14)) = 6 at {}",
        listed.join(",")
    ))
}

fn certificate_vs_oracle(doubled: &[Instance]) -> Outcome {
    let mut total_eta = 0;
    for inst in doubled {
        let cert = nullity_certificate(&inst.params).map_err(|e| e.to_string())?;
        let numeric = nullity_numeric(&inst.params, SPECTRUM_TOL).eta;
        let oracle = inst.oracle_nullity();
        ensure(cert.eta == numeric && numeric == oracle, || {
            format!(
                "{}: certificate {} numeric {numeric} oracle {oracle}",
                inst.params, cert.eta
            )
        })?;
        total_eta += cert.eta;
    }
    Ok(format!(
        "{} instances of I(n,j,2j), n <= 100; {total_eta} zero eigenvalues in total",
        doubled.len()
    ))
}

fn rowlinson(sweep: &[Instance], doubled: &[Instance]) -> Outcome {
    let mut checked = 0;
    let mut tightest = 0.0f64;
    for inst in sweep.iter().chain(doubled) {
        let eta = inst.oracle_nullity();
        match rowlinson_bound_holds(&inst.params, eta) {
            Some(true) => {
                checked += 1;
                tightest = tightest.max(eta as f64 / (inst.params.n() + 1) as f64);
            }
            Some(false) => return Err(format!("{}: eta {eta} > n + 1", inst.params)),
            None => {}
        }
    }
    Ok(format!(
        "{checked} connected instances, max eta/(n+1) = {tightest:.3}"
    ))
}

fn random_circulants() -> Outcome {
    let mut rng = StdRng::seed_from_u64(CIRCULANT_SEED);
    let mut worst: f64 = 0.0;
    for trial in 0..200 {
        let n = rng.gen_range(1..=32usize);
        let mut entries = vec![0.0; n];
        for i in 0..=n / 2 {
            let bit = f64::from(u8::from(rng.gen_bool(0.5)));
            entries[i] = bit;
            entries[(n - i) % n] = bit;
        }
        let row = CirculantRow::new(entries.clone()).map_err(|e| e.to_string())?;
        let mut closed: Vec<f64> = (0..n)
            .map(|l| circulant_eigenvalue_real(&row, l))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        closed.sort_by(f64::total_cmp);
        let matrix = DenseSymmetricMatrix::from_upper(n, |r, c| entries[(c + n - r) % n]);
        let dense = eigenvalues_bruteforce(&matrix).map_err(|e| e.to_string())?;
        let dev = closed
            .iter()
            .zip(&dense)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        ensure(dev <= CIRCULANT_TOL, || {
            format!("trial {trial}, n = {n}: deviation {dev:e}")
        })?;
        worst = worst.max(dev);
    }
    Ok(format!(
        "200 random symmetric 0/1 circulants, max deviation {worst:e} <= {CIRCULANT_TOL:e}"
    ))
}

fn cycle_decomposition() -> Outcome {
    let mut cases = 0;
    for n in 3..=60usize {
        for step in 1..=(n - 1) / 2 {
            let d = subgraph_cycles(n, step);
            let g = gcd(n, step);
            ensure(d.component_count == g && d.cycle_length == n / g, || {
                format!(
                    "n={n} step={step}: {} cycles of length {}",
                    d.component_count, d.cycle_length
                )
            })?;
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + step) % n)).collect();
            let rim = AdjacencyMatrix::from_edges(n, &edges).map_err(|e| e.to_string())?;
            let bfs = bfs_components(&rim);
            ensure(bfs == g, || {
                format!("n={n} step={step}: BFS finds {bfs} components, gcd {g}")
            })?;
            for cycle in &d.components {
                let closed =
                    (0..cycle.len()).all(|w| cycle[(w + 1) % cycle.len()] == (cycle[w] + step) % n);
                ensure(cycle.len() == n / g && closed, || {
                    format!("n={n} step={step}: bad cycle {cycle:?}")
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, step) rims with n <= 60"))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let started = Instant::now();
    let sweep: Vec<Instance> = (3..=40)
        .flat_map(IGraphParams::enumerate)
        .map(Instance::new)
        .collect();
    let doubled: Vec<Instance> = (3..=100)
        .flat_map(IGraphParams::enumerate)
        .filter(|p| p.k() == 2 * p.j())
        .map(Instance::new)
        .collect();

    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "1 closed-form spectrum matches oracle (n <= 40)",
            Box::new(|| closed_form_vs_oracle(&sweep)),
        ),
        (
            "2 eigenvector residuals (n <= 40)",
            Box::new(|| eigenvector_residuals(&sweep)),
        ),
        (
            "3 quadratic identity (n <= 40)",
            Box::new(|| quadratic_identity(&sweep)),
        ),
        (
            "4 connectedness: gcd = BFS = multiplicity of 3",
            Box::new(|| connectedness(&sweep)),
        ),
        (
            "5 bipartiteness: spectral = colouring = parity",
            Box::new(|| bipartiteness(&sweep)),
        ),
        (
            "6 worked nullity examples",
            Box::new(worked_nullity_examples),
        ),
        (
            "7 certificate = numeric = oracle nullity (I(n,j,2j), n <= 100)",
            Box::new(|| certificate_vs_oracle(&doubled)),
        ),
        (
            "8 nullity bound eta <= n + 1 (connected)",
            Box::new(|| rowlinson(&sweep, &doubled)),
        ),
        (
            "9 circulant closed form vs oracle (200 random)",
            Box::new(random_circulants),
        ),
        (
            "10 rim cycle decomposition (n <= 60)",
            Box::new(cycle_decomposition),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! `igraph`: spectra, structure and nullity of I-graphs from the command line.
//!
//! Exit codes: 0 success, 1 invalid arguments, 2 verification failure,
//! 3 internal inconsistency.

mod verify;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use igraph_spectrum::graph::{build_adjacency, to_dot, IGraphParams};
use igraph_spectrum::nullity::{nullity_certificate, nullity_numeric};
use igraph_spectrum::spectrum::full_spectrum;
use igraph_spectrum::structure::{is_bipartite_spectral, structure_report};
use igraph_spectrum::{Error, DEFAULT_TOLERANCE};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "igraph",
    version,
    about = "Closed-form spectra of I-graphs I(n,j,k)"
)]
struct Cli {
    /// Comparison tolerance for eigenvalue tests (ignored by the exact nullity path).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All 2n eigenvalues with their rim eigenvalues and multiplicity groups.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Connectedness and bipartiteness, arithmetic, spectral and by search.
    Structure {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Nullity: exact certificate when k = 2j, numeric count otherwise.
    Nullity {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Check closed forms against brute-force oracles over a range of n.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
        /// Added to every closed-form eigenvalue before comparison (fault injection).
        #[arg(long, default_value_t = 0.0, hide = true)]
        perturb: f64,
    },
    /// One summary row per canonical (n, j, k) in range.
    Sweep {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Graph export as Graphviz DOT or a 0/1 adjacency grid.
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, conflicts_with = "matrix")]
        dot: bool,
        #[arg(long)]
        matrix: bool,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(allow_negative_numbers = true)]
    n: i64,
    #[arg(allow_negative_numbers = true)]
    j: i64,
    #[arg(allow_negative_numbers = true)]
    k: i64,
}

#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Only instances with k = 2j.
    #[arg(long)]
    doubled: bool,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Verification(String),
    Inconsistency(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Inconsistency(msg) => Failure::Inconsistency(msg),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Inconsistency(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Invalid(msg) => eprintln!("error: {msg}"),
                Failure::Verification(report) => print!("{report}"),
                Failure::Inconsistency(msg) => eprintln!("internal inconsistency: {msg}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn params(graph: &GraphArgs) -> Result<IGraphParams, Failure> {
    Ok(IGraphParams::new(graph.n, graph.j, graph.k)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data serializes");
    out.push('\n');
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    let tolerance = cli.tolerance;
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Failure::Invalid(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    match cli.command {
        Command::Spectrum { graph, format } => {
            let spectrum = full_spectrum(&params(&graph)?, tolerance);
            Ok(match format {
                Format::Json => json(&spectrum),
                Format::Csv => {
                    let mut out = String::from("l,branch,value,alpha,beta,a\n");
                    for p in &spectrum.points {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            p.l, p.branch, p.value, p.alpha, p.beta, p.a_coeff
                        );
                    }
                    out
                }
            })
        }
        Command::Structure { graph } => Ok(json(&structure_report(&params(&graph)?, tolerance))),
        Command::Nullity { graph } => nullity(&params(&graph)?, tolerance),
        Command::Verify { range, perturb } => {
            let instances = enumerate(&range)?;
            let report = with_pool(range.jobs, || verify::run(&instances, tolerance, perturb))?;
            if !report.inconsistencies.is_empty() {
                return Err(Failure::Inconsistency(report.inconsistencies.join("; ")));
            }
            if report.passed {
                Ok(json(&report))
            } else {
                Err(Failure::Verification(json(&report)))
            }
        }
        Command::Sweep { range, format } => {
            let instances = enumerate(&range)?;
            let rows = with_pool(range.jobs, || {
                instances
                    .par_iter()
                    .map(|p| sweep_row(p, tolerance))
                    .collect::<Result<Vec<_>, Error>>()
            })??;
            Ok(match format {
                Format::Json => json(&rows),
                Format::Csv => {
                    let mut out =
                        String::from("n,j,k,gcd,connected,bipartite,eta,lambda_min,lambda_max\n");
                    for r in &rows {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{},{},{},{},{}",
                            r.n,
                            r.j,
                            r.k,
                            r.gcd,
                            r.connected,
                            r.bipartite,
                            r.eta,
                            r.lambda_min,
                            r.lambda_max
                        );
                    }
                    out
                }
            })
        }
        Command::Export {
            graph,
            dot: _,
            matrix,
        } => {
            let params = params(&graph)?;
            Ok(if matrix {
                build_adjacency(&params).to_grid()
            } else {
                to_dot(&params)
            })
        }
    }
}

#[derive(Serialize)]
struct NumericNullityOutput {
    eta: usize,
    zero_indices: Vec<igraph_spectrum::nullity::ZeroIndex>,
    note: &'static str,
}

fn nullity(params: &IGraphParams, tolerance: f64) -> Result<String, Failure> {
    if params.k() == 2 * params.j() {
        return Ok(json(&nullity_certificate(params)?));
    }
    let numeric = nullity_numeric(params, tolerance);
    for p in &numeric.ambiguous {
        eprintln!(
            "warning: |λ_{}{}| = {:e} lies just above the tolerance; the count may depend on it",
            p.l,
            p.branch,
            p.value.abs()
        );
    }
    Ok(json(&NumericNullityOutput {
        eta: numeric.eta,
        zero_indices: numeric.zero_indices,
        note: "numeric count from closed-form eigenvalues; exact certificates need k = 2j",
    }))
}

#[derive(Serialize)]
struct SweepRow {
    n: usize,
    j: usize,
    k: usize,
    gcd: usize,
    connected: bool,
    bipartite: bool,
    eta: usize,
    lambda_min: f64,
    lambda_max: f64,
}

fn sweep_row(params: &IGraphParams, tolerance: f64) -> Result<SweepRow, Error> {
    let spectrum = full_spectrum(params, tolerance);
    let eta = if params.k() == 2 * params.j() {
        nullity_certificate(params)?.eta
    } else {
        nullity_numeric(params, tolerance).eta
    };
    Ok(SweepRow {
        n: params.n(),
        j: params.j(),
        k: params.k(),
        gcd: params.gcd(),
        connected: params.gcd() == 1,
        bipartite: is_bipartite_spectral(&spectrum, tolerance),
        eta,
        lambda_min: spectrum.min(),
        lambda_max: spectrum.max(),
    })
}

fn enumerate(range: &RangeArgs) -> Result<Vec<IGraphParams>, Failure> {
    if range.n_min < 3 || range.n_max < range.n_min {
        return Err(Failure::Invalid(format!(
            "need 3 <= n-min <= n-max, got {}..{}",
            range.n_min, range.n_max
        )));
    }
    Ok((range.n_min..=range.n_max)
        .flat_map(IGraphParams::enumerate)
        .filter(|p| !range.doubled || p.k() == 2 * p.j())
        .collect())
}

fn with_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        if jobs == 0 {
            return Err(Failure::Invalid("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder
        .build()
        .map_err(|err| Failure::Invalid(format!("thread pool: {err}")))?;
    Ok(pool.install(work))
}

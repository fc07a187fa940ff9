//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a check failure, 2 on usage,
//! parse or precondition errors.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::coloring_complex::ColoringComplex;
use crate::corpus::random_graphs;
use crate::group_algebra::verify_identities;
use crate::hodge::{
    summarize, verify_all, verify_switching_equivariance, Check, HodgeComplex, HodgeError,
    HodgeReport, FULL_CHECK_MAX_VERTICES,
};
use crate::signed_graph::{coefficients_from_polynomial, parse_graph, SignedGraph};

/// Largest `n` for `complex`, `hodge`, `verify` and `corpus` by default.
pub const DEFAULT_MAX_VERTICES: usize = 4;
/// Largest `n` with `--allow-large`.
pub const LARGE_MAX_VERTICES: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "typeb-hodge",
    version,
    about = "Signed-graph chromatic polynomials and the type B Hodge decomposition of coloring complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Permit graphs with up to 6 vertices.
    #[arg(long, global = true)]
    allow_large: bool,
    /// Add the rank-4 group-algebra identities and, for `corpus`, n = 5 spot checks.
    #[arg(long, global = true)]
    slow: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the chromatic polynomial and its signed coefficients.
    Chroma { file: PathBuf },
    /// Print the f-vector and facet count of the coloring complex.
    Complex { file: PathBuf },
    /// Print homology and Hodge dimensions by both methods.
    Hodge { file: PathBuf },
    /// Run every check on one graph.
    Verify { file: PathBuf },
    /// Verify seeded random graphs.
    Corpus {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Number of random `n = 5` graphs checked by `corpus --slow`.
const SLOW_SPOT_CHECKS: usize = 1;

enum Failure {
    Usage(String),
    Checks,
}

impl<E: Display> From<E> for Failure
where
    E: std::error::Error,
{
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Checks) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let limit = if cli.allow_large {
        LARGE_MAX_VERTICES
    } else {
        DEFAULT_MAX_VERTICES
    };
    match &cli.command {
        Command::Chroma { file } => chroma(&load(file)?, cli.json, out),
        Command::Complex { file } => complex(&load_for_complex(file, limit)?, cli.json, out),
        Command::Hodge { file } => hodge(&load_for_complex(file, limit)?, cli.json, out),
        Command::Verify { file } => {
            verify(&load_for_complex(file, limit)?, cli.slow, cli.json, out)
        }
        Command::Corpus { n, count, seed } => {
            check_size(*n, limit)?;
            if *n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            corpus(*n, *count, *seed, cli.slow, cli.json, out)
        }
    }
}

fn load(path: &PathBuf) -> Result<SignedGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn check_size(n: usize, limit: usize) -> Outcome {
    if n > limit {
        let hint = if limit < LARGE_MAX_VERTICES {
            " (use --allow-large for up to 6)"
        } else {
            ""
        };
        return Err(Failure::Usage(format!(
            "graph has {n} vertices, limit is {limit}{hint}"
        )));
    }
    Ok(())
}

fn load_for_complex(path: &PathBuf, limit: usize) -> Result<SignedGraph, Failure> {
    let g = load(path)?;
    if !g.has_edges() {
        return Err(Failure::Usage(format!(
            "{}: the coloring complex is undefined for a graph without edges",
            path.display()
        )));
    }
    check_size(g.n(), limit)?;
    Ok(g)
}

fn tuple<T: Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct ChromaReport {
    polynomial: String,
    chromatic: Vec<i64>,
    c: Vec<i64>,
}

fn chroma(g: &SignedGraph, json: bool, out: &mut dyn Write) -> Outcome {
    let chi = g.chromatic_polynomial();
    let c = coefficients_from_polynomial(g.n(), &chi).map_err(|e| {
        Failure::Usage(format!("chromatic polynomial {chi} has {e}"))
    })?;
    let to_i64 = |b: &num_bigint::BigInt| -> Result<i64, Failure> {
        i64::try_from(b).map_err(|_| Failure::Usage(format!("coefficient {b} overflows")))
    };
    let report = ChromaReport {
        polynomial: chi.to_string(),
        chromatic: chi.coeffs().iter().map(to_i64).collect::<Result<_, _>>()?,
        c: c.iter().map(to_i64).collect::<Result<_, _>>()?,
    };
    if json {
        return emit_json(out, &report);
    }
    writeln!(out, "{}", report.polynomial)?;
    writeln!(out, "c = {}", tuple(&report.c))?;
    Ok(())
}

#[derive(Serialize)]
struct ComplexReport {
    n: usize,
    f_vector: Vec<usize>,
    facets: usize,
}

fn complex(g: &SignedGraph, json: bool, out: &mut dyn Write) -> Outcome {
    let cx = ColoringComplex::new(g)?;
    let report = ComplexReport {
        n: g.n(),
        facets: cx.dim(cx.top_grade()),
        f_vector: cx.f_vector(),
    };
    if json {
        return emit_json(out, &report);
    }
    writeln!(out, "f-vector (grades -1..{}): {}", cx.top_grade(), tuple(&report.f_vector))?;
    writeln!(out, "facets: {}", report.facets)?;
    Ok(())
}

#[derive(Serialize)]
struct HodgeDims {
    homology: Vec<usize>,
    hodge_euler: Vec<i64>,
    hodge_kernel: Vec<i64>,
}

fn hodge(g: &SignedGraph, json: bool, out: &mut dyn Write) -> Outcome {
    let hc = HodgeComplex::new(g)?;
    let report = HodgeDims {
        homology: hc.homology_dims(),
        hodge_euler: hc.hodge_dims_euler()?,
        hodge_kernel: if g.n() <= FULL_CHECK_MAX_VERTICES {
            hc.hodge_dims_kernel()?
        } else {
            Vec::new()
        },
    };
    if json {
        return emit_json(out, &report);
    }
    writeln!(
        out,
        "reduced homology (grades -1..{}): {}",
        hc.top_grade(),
        tuple(&report.homology)
    )?;
    writeln!(out, "hodge dims, euler:  {}", tuple(&report.hodge_euler))?;
    if report.hodge_kernel.is_empty() {
        writeln!(out, "hodge dims, kernel: skipped for n > {FULL_CHECK_MAX_VERTICES}")?;
    } else {
        writeln!(out, "hodge dims, kernel: {}", tuple(&report.hodge_kernel))?;
    }
    Ok(())
}

fn identity_checks(max_rank: usize) -> Result<Vec<Check>, HodgeError> {
    let mut checks = Vec::new();
    for n in 0..=max_rank {
        let results = verify_identities(n)?
            .into_iter()
            .map(|c| Check::new(c.name, c.holds, ""))
            .collect();
        checks.push(summarize(&format!("group_algebra_identities[n={n}]"), results));
    }
    Ok(checks)
}

/// Main-theorem report plus switching at every vertex and block-diagonality.
fn full_report(g: &SignedGraph, mut report: HodgeReport) -> Result<HodgeReport, HodgeError> {
    if g.n() > FULL_CHECK_MAX_VERTICES {
        report.checks.push(Check::new(
            "block_diagonal_and_switching",
            true,
            format!("skipped: runs for n <= {FULL_CHECK_MAX_VERTICES}"),
        ));
        return Ok(report);
    }
    let hc = HodgeComplex::new(g)?;
    report
        .checks
        .push(summarize("block_diagonal", hc.verify_block_diagonal()?));
    for v in 1..=g.n() {
        let checks = verify_switching_equivariance(g, v)?;
        report
            .checks
            .push(summarize(&format!("switching[v={v}]"), checks));
    }
    report.verdict = report.checks.iter().all(|c| c.passed);
    Ok(report)
}

fn print_report(out: &mut dyn Write, report: &HodgeReport) -> Outcome {
    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        if check.detail.is_empty() {
            writeln!(out, "{status} {}", check.name)?;
        } else {
            writeln!(out, "{status} {}: {}", check.name, check.detail)?;
        }
    }
    Ok(())
}

fn verdict_line(report: &HodgeReport) -> String {
    let status = if report.verdict { "PASS" } else { "FAIL" };
    let relation = if report.c == report.hodge_euler { "=" } else { "!=" };
    format!(
        "verdict: {status}  c = {} {relation} Hodge dims {}",
        tuple(&report.c),
        tuple(&report.hodge_euler)
    )
}

fn verify(g: &SignedGraph, slow: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let base = crate::hodge::verify_main_theorem(g)?;
    let mut report = full_report(g, base)?;
    let max_rank = if slow { 4 } else { g.n().min(3) };
    report.checks.extend(identity_checks(max_rank)?);
    report.verdict = report.checks.iter().all(|c| c.passed);
    if json {
        emit_json(out, &report)?;
    } else {
        print_report(out, &report)?;
        writeln!(out, "{}", verdict_line(&report))?;
    }
    if report.verdict {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

#[derive(Serialize)]
struct CorpusReport {
    n: usize,
    count: usize,
    seed: u64,
    reports: Vec<HodgeReport>,
    extra_checks: Vec<Check>,
    verdict: bool,
}

fn corpus(n: usize, count: usize, seed: u64, slow: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let graphs = random_graphs(n, count, seed);
    let reports = verify_all(&graphs)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut extra_checks = Vec::new();
    if slow {
        extra_checks.extend(identity_checks(4)?);
        let spot = random_graphs(5, SLOW_SPOT_CHECKS, seed);
        for (k, r) in verify_all(&spot).into_iter().enumerate() {
            let r = r?;
            extra_checks.push(Check::new(
                format!("spot_check_n5[{k}]"),
                r.verdict,
                verdict_line(&r),
            ));
        }
    }
    let verdict = reports.iter().all(|r| r.verdict) && extra_checks.iter().all(|c| c.passed);
    let report = CorpusReport {
        n,
        count,
        seed,
        reports,
        extra_checks,
        verdict,
    };
    if json {
        emit_json(out, &report)?;
    } else {
        for (k, r) in report.reports.iter().enumerate() {
            let edges = r.graph.lines().skip(1).collect::<Vec<_>>().join("; ");
            writeln!(out, "[{k}] {}  [{edges}]", verdict_line(r))?;
            for failure in r.failures() {
                writeln!(out, "    FAIL {}: {}", failure.name, failure.detail)?;
            }
        }
        for c in &report.extra_checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{status} {}: {}", c.name, c.detail)?;
        }
        let passed = report.reports.iter().filter(|r| r.verdict).count();
        writeln!(
            out,
            "corpus n = {n}, seed = {seed}: {passed}/{count} graphs pass; verdict: {}",
            if verdict { "PASS" } else { "FAIL" }
        )?;
    }
    if verdict {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 numerical
//! non-convergence, 3 degenerate geometry.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::counting::{ratio_report, RatioReport};
use crate::error::Error;
use crate::figures::Figure;
use crate::geometry::ConvexDomain;
use crate::measures::{
    lp_circle_norm, outer_mass_ratio, resolve_radius, split_factor, sup_grid_norm_diff,
    DiagnosticParameters, DiagnosticRecord,
};
use crate::poly::CoefficientPolynomial;
use crate::rootfind::{self, RootSolveResult, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::sequences::{GeneratedInstance, SequenceKind, SequenceSpec};

/// First line of every CSV written by the tool.
pub const FORMAT_TAG: &str = "# lucaslab-v1";

/// Environment variable bounding the worker count.
pub const THREADS_ENV: &str = "LUCASLAB_THREADS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    NonConvergence(String),
    Geometry(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 1,
            Self::NonConvergence(_) => 2,
            Self::Geometry(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::NonConvergence(m) | Self::Geometry(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::DegenerateRadius { .. }
            | Error::ContourTooClose { .. }
            | Error::Pole { .. }
            | Error::AnalyticityViolated { .. } => Self::Geometry(msg),
            Error::NonIntegerWinding { .. }
            | Error::ConstructionInvariant(_)
            | Error::EvaluationOverflow
            | Error::CoefficientOverflow { .. } => Self::NonConvergence(msg),
            _ => Self::Usage(msg),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "lucaslab",
    version,
    about = "Zeros of polynomial sequences and their derivatives near convex domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve for all roots of a polynomial given as JSON {"coeffs": [[re, im], ...]}
    Roots(RootsArgs),
    /// Ratio reports for every member of a sequence
    Converge(ConvergeArgs),
    /// `converge` on the Chebyshev counterexample sequence
    Counterexample(CounterexampleArgs),
    /// Write one of the reproduced figures as SVG
    Figure(FigureArgs),
    /// Outer-factor diagnostics per member of a sequence
    Diag(DiagArgs),
}

#[derive(Args, Debug)]
struct RootsArgs {
    /// polynomial JSON file
    #[arg(required_unless_present = "chebyshev", conflicts_with = "chebyshev")]
    poly: Option<PathBuf>,
    /// solve for the zeros of T_N instead of reading a file
    #[arg(long, value_name = "N")]
    chebyshev: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
struct RangeArgs {
    /// Ω as JSON or a JSON file; defaults to the sequence's own domain
    #[arg(long)]
    domain: Option<String>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// overrides the seed of random sequences
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct ConvergeArgs {
    /// SequenceSpec as JSON or a JSON file
    #[arg(long)]
    spec: String,
    #[arg(long, default_value_t = 0.05)]
    eps: f64,
    /// summary JSON path; defaults to <out>.summary.json, or stderr without --out
    #[arg(long)]
    summary: Option<PathBuf>,
    #[command(flatten)]
    range: RangeArgs,
}

#[derive(Args, Debug)]
struct CounterexampleArgs {
    #[arg(long, default_value_t = 0.05)]
    eps: f64,
    #[arg(long)]
    summary: Option<PathBuf>,
    #[command(flatten)]
    range: RangeArgs,
}

#[derive(Args, Debug)]
struct FigureArgs {
    /// fig1, fig2-left or fig2-right
    which: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DiagArgs {
    #[arg(long)]
    spec: String,
    #[arg(long, default_value_t = 0.05)]
    eps: f64,
    /// circle radii, comma separated; defaults to 1 + 2 eps
    #[arg(long, value_delimiter = ',')]
    r: Vec<f64>,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// trapezoid nodes on each circle
    #[arg(long, default_value_t = 1024)]
    nodes: usize,
    /// grid step for the sup-norm sampling
    #[arg(long, default_value_t = 0.02)]
    grid_step: f64,
    #[command(flatten)]
    range: RangeArgs,
}

/// Parses `args` (including the program name) and runs the command; returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("lucaslab: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Roots(a) => cmd_roots(a),
        Command::Converge(a) => {
            let spec = parse_json_arg::<SequenceSpec>(&a.spec, "sequence spec")?;
            cmd_converge(spec, a.eps, a.summary, a.range)
        }
        Command::Counterexample(a) => {
            let spec =
                SequenceSpec::new(SequenceKind::ChebyshevCounterexample { eps: a.eps }, 2, 64);
            cmd_converge(spec, a.eps, a.summary, a.range)
        }
        Command::Figure(a) => {
            let fig: Figure = a.which.parse()?;
            emit(a.out.as_deref(), &fig.render()?)
        }
        Command::Diag(a) => cmd_diag(a),
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn parse_json_arg<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> CliResult<T> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_text(Path::new(arg))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid {what}: {e}")))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn cmd_roots(a: RootsArgs) -> CliResult<()> {
    let result: RootSolveResult = match (a.chebyshev, &a.poly) {
        (Some(n), _) => rootfind::chebyshev_roots(n, a.tol, a.max_iter)?,
        (None, Some(path)) => {
            let p: CoefficientPolynomial = serde_json::from_str(&read_text(path)?)
                .map_err(|e| CliError::Usage(format!("invalid polynomial JSON: {e}")))?;
            rootfind::solve(&p, a.tol, a.max_iter)?
        }
        (None, None) => {
            return Err(CliError::Usage(
                "need a polynomial file or --chebyshev N".into(),
            ))
        }
    };
    emit(a.out.as_deref(), &to_json(&result))?;
    if result.converged {
        Ok(())
    } else {
        Err(CliError::NonConvergence(format!(
            "no convergence after {} iterations (max residual {:e})",
            result.iterations,
            result.max_residual()
        )))
    }
}

fn apply_range(mut spec: SequenceSpec, range: &RangeArgs) -> CliResult<SequenceSpec> {
    if range.n_min.is_some() || range.n_max.is_some() {
        let ns = spec.ns().ok();
        let lo = range
            .n_min
            .or_else(|| ns.as_ref().and_then(|v| v.first().copied()));
        let hi = range
            .n_max
            .or_else(|| ns.as_ref().and_then(|v| v.last().copied()));
        spec.n_min = lo;
        spec.n_max = hi;
        spec.n_values = None;
    }
    if let (Some(s), SequenceKind::RandomOutlier { seed, .. }) = (range.seed, &mut spec.kind) {
        *seed = s;
    }
    spec.ns()?;
    Ok(spec)
}

fn resolve_domain(spec: &SequenceSpec, range: &RangeArgs) -> CliResult<ConvexDomain> {
    match &range.domain {
        Some(arg) => parse_json_arg(arg, "domain"),
        None => Ok(spec.domain()),
    }
}

/// Runs `f` for every n on a pool bounded by [`THREADS_ENV`]; results come
/// back in ascending n.
fn per_instance<T: Send>(
    spec: &SequenceSpec,
    f: impl Fn(GeneratedInstance) -> CliResult<T> + Sync,
) -> CliResult<Vec<T>> {
    let ns = spec.ns()?;
    let work = || -> Vec<CliResult<T>> { ns.par_iter().map(|&n| f(spec.instance(n)?)).collect() };
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok());
    let results = match threads {
        Some(t) if t > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?
            .install(work),
        _ => work(),
    };
    results.into_iter().collect()
}

fn derivative_zeros(inst: &GeneratedInstance) -> CliResult<RootSolveResult> {
    let dp = inst.derivative_zeros()?;
    if !dp.converged {
        return Err(CliError::NonConvergence(format!(
            "derivative zeros for n = {} did not converge (max residual {:e})",
            inst.n,
            dp.max_residual()
        )));
    }
    Ok(dp)
}

#[derive(Serialize)]
struct ConvergeSummary {
    rows: usize,
    final_n: usize,
    final_ratio_problem: f64,
    final_ratio_theorem: f64,
    max_grazing: usize,
    certifying: bool,
    parameters: serde_json::Value,
}

fn cmd_converge(
    spec: SequenceSpec,
    eps: f64,
    summary_path: Option<PathBuf>,
    range: RangeArgs,
) -> CliResult<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(CliError::Usage(format!(
            "--eps must be positive, got {eps}"
        )));
    }
    let spec = apply_range(spec, &range)?;
    let domain = resolve_domain(&spec, &range)?;
    let reports: Vec<RatioReport> = per_instance(&spec, |inst| {
        let dp = derivative_zeros(&inst)?;
        Ok(ratio_report(&inst.roots, &dp.roots, &domain, eps, inst.n)?)
    })?;
    let parameters = json!({ "command": "converge", "spec": spec, "domain": domain, "eps": eps });
    let last = reports.last().expect("range is nonempty");
    let max_grazing = reports.iter().map(|r| r.grazing).max().unwrap_or(0);
    let summary = ConvergeSummary {
        rows: reports.len(),
        final_n: last.n,
        final_ratio_problem: last.ratios.problem,
        final_ratio_theorem: last.ratios.theorem,
        max_grazing,
        certifying: max_grazing == 0,
        parameters: parameters.clone(),
    };

    let body = match range.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "{FORMAT_TAG}");
            let _ = writeln!(
                s,
                "# parameters {}",
                serde_json::to_string(&parameters).expect("json")
            );
            let _ = writeln!(s, "{},status", RatioReport::CSV_HEADER);
            for r in &reports {
                let flag = if r.grazing == 0 { "ok" } else { "grazing" };
                let _ = writeln!(s, "{},{flag}", r.csv_row());
            }
            s
        }
        Format::Json => to_json(
            &json!({ "format": "lucaslab-v1", "parameters": parameters, "reports": reports }),
        ),
    };
    emit(range.out.as_deref(), &body)?;

    let summary_text = to_json(&summary);
    let summary_path = summary_path.or_else(|| {
        range.out.as_ref().map(|o| {
            let mut name = o.as_os_str().to_owned();
            name.push(".summary.json");
            PathBuf::from(name)
        })
    });
    match summary_path {
        Some(p) => emit(Some(&p), &summary_text)?,
        None => eprint!("{summary_text}"),
    }
    if max_grazing > 0 {
        eprintln!("lucaslab: {max_grazing} grazing zeros; run is non-certifying");
    }
    Ok(())
}

struct DiagRow {
    n: usize,
    m_n: usize,
    k_n: usize,
    outer_mass_ratio: f64,
    /// (requested radius, radius used, value)
    circle: Vec<(f64, f64, f64)>,
    sup_grid: f64,
}

fn cmd_diag(a: DiagArgs) -> CliResult<()> {
    if !(a.eps > 0.0 && a.eps.is_finite()) {
        return Err(CliError::Usage(format!(
            "--eps must be positive, got {}",
            a.eps
        )));
    }
    let spec = apply_range(
        parse_json_arg::<SequenceSpec>(&a.spec, "sequence spec")?,
        &a.range,
    )?;
    let domain = resolve_domain(&spec, &a.range)?;
    let radii = if a.r.is_empty() {
        vec![1.0 + 2.0 * a.eps]
    } else {
        a.r.clone()
    };
    let rows: Vec<DiagRow> = per_instance(&spec, |inst| {
        let split = split_factor(&inst.roots, &domain, a.eps)?;
        let mut circle = Vec::with_capacity(radii.len());
        for &r in &radii {
            let used = resolve_radius(&split.outer_roots, r)?;
            circle.push((
                r,
                used,
                lp_circle_norm(&split.outer_roots, split.m_n, used, a.p, a.nodes)?,
            ));
        }
        Ok(DiagRow {
            n: inst.n,
            m_n: split.m_n,
            k_n: split.k_n,
            outer_mass_ratio: outer_mass_ratio(&split),
            circle,
            sup_grid: sup_grid_norm_diff(
                &split.outer_roots,
                split.m_n,
                &domain,
                a.eps,
                a.grid_step,
            )?,
        })
    })?;

    let body = match a.range.format {
        Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "{FORMAT_TAG}");
            let params = json!({
                "command": "diag", "spec": spec, "domain": domain, "eps": a.eps,
                "r": radii, "p": a.p, "nodes": a.nodes, "grid_step": a.grid_step,
            });
            let _ = writeln!(
                s,
                "# parameters {}",
                serde_json::to_string(&params).expect("json")
            );
            let mut header = String::from("n,m_n,k_n,outer_mass_ratio");
            for r in &radii {
                let _ = write!(header, ",lp_circle_r{r}");
            }
            header.push_str(",sup_grid");
            let _ = writeln!(s, "{header}");
            for row in &rows {
                let _ = write!(
                    s,
                    "{},{},{},{:.12e}",
                    row.n, row.m_n, row.k_n, row.outer_mass_ratio
                );
                for (_, _, v) in &row.circle {
                    let _ = write!(s, ",{v:.12e}");
                }
                let _ = writeln!(s, ",{:.12e}", row.sup_grid);
            }
            s
        }
        Format::Json => {
            let mut records = Vec::new();
            for row in &rows {
                let rec = |name: &str,
                           value: f64,
                           r: Option<f64>,
                           p: Option<f64>,
                           nodes: Option<usize>| DiagnosticRecord {
                    n: row.n,
                    m_n: row.m_n,
                    k_n: row.k_n,
                    quantity_name: name.into(),
                    value,
                    parameters: DiagnosticParameters {
                        r,
                        p,
                        eps: a.eps,
                        nodes,
                    },
                };
                records.push(rec(
                    "outer_mass_ratio",
                    row.outer_mass_ratio,
                    None,
                    None,
                    None,
                ));
                for &(_, used, v) in &row.circle {
                    records.push(rec(
                        "lp_circle_norm",
                        v,
                        Some(used),
                        Some(a.p),
                        Some(a.nodes),
                    ));
                }
                records.push(rec("sup_grid_norm_diff", row.sup_grid, None, None, None));
            }
            to_json(
                &json!({ "format": "lucaslab-v1", "spec": spec, "domain": domain, "records": records }),
            )
        }
    };
    emit(a.range.out.as_deref(), &body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        let geo: CliError = Error::DegenerateRadius {
            radius: 1.0,
            clearance: 1e-6,
        }
        .into();
        assert_eq!(geo.exit_code(), 3);
        let num: CliError = Error::NonIntegerWinding {
            value: 0.5,
            tolerance: 1e-3,
        }
        .into();
        assert_eq!(num.exit_code(), 2);
        let usage: CliError = Error::InvalidInput("x".into()).into();
        assert_eq!(usage.exit_code(), 1);
    }

    #[test]
    fn range_overrides() {
        let spec = SequenceSpec::new(SequenceKind::ChebyshevCounterexample { eps: 0.05 }, 2, 64);
        let range = RangeArgs {
            domain: None,
            n_min: Some(5),
            n_max: None,
            seed: None,
            out: None,
            format: Format::Csv,
        };
        assert_eq!(
            apply_range(spec, &range).unwrap().ns().unwrap(),
            (5..=64).collect::<Vec<_>>()
        );
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(run(["lucaslab", "bogus"]), 1);
        assert_eq!(run(["lucaslab", "figure", "fig9"]), 1);
        assert_eq!(run(["lucaslab", "--help"]), 0);
    }
}

//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use prep_atlas_core::cantor::{cantor_level, localize_in};
use prep_atlas_core::capacity::{
    degree_bound_with_cap, exact_n_diameter, fekete_optimize, interval_capacity, lemniscate_capacity, FeketeConfig,
    FeketeSet, DEFAULT_CRITERION_CAP,
};
use prep_atlas_core::classify::classify_totally_real_prep;
use prep_atlas_core::mandelset::{escape_grid, prep_roots_with, verify_in_disc, RootFinderConfig, Window};
use prep_atlas_core::orbit::{decide_algebraic, decide_rational, DEFAULT_DEGREE_CAP};
use prep_atlas_core::precision::set_default_precision;
use prep_atlas_core::{alg_compare, Rational};

use crate::acceptance;
use crate::output;
use crate::parse::{self, ParseError};
use crate::view::*;

#[derive(Parser, Debug)]
#[command(name = "prep-atlas", version, about = "Preperiodic parameters of x^2 + c, computed exactly")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Starting bit precision for interval evaluations.
    #[arg(long, global = true, env = "PREP_ATLAS_PRECISION")]
    pub precision: Option<u32>,
    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Pgm,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Escape-time raster of the parameter plane for a fixed alpha.
    Render(RenderArgs),
    /// Complex roots of F_{m,n}, certified by residual bounds.
    PrepRoots(PrepRootsArgs),
    /// Is alpha preperiodic under x^2 + c?
    Decide(DecideArgs),
    /// Nested intervals containing the real parameters (|alpha| >= 2).
    Cantor(CantorArgs),
    /// Capacities, n-diameters and Fekete points.
    Capacity(CapacityArgs),
    /// Degree bound for totally real algebraic integers in an interval.
    DegreeBound(DegreeBoundArgs),
    /// Totally real parameters c with alpha preperiodic (alpha in {-1, 0, 1}).
    Classify(ClassifyArgs),
    /// Recompute the published results and print a pass/fail table.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// re_min,re_max,im_min,im_max
    #[arg(long, allow_hyphen_values = true, default_value = "-2.5,1.5,-1.5,1.5")]
    pub window: String,
    /// WIDTHxHEIGHT
    #[arg(long, default_value = "512x512")]
    pub res: String,
    #[arg(long, default_value_t = 100)]
    pub max_iter: u32,
    #[arg(long, value_enum, default_value = "pgm")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct PrepRootsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    /// Bound on |F_{m,n}(root)| at each reported double, and slack for the
    /// disc check.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
    pub degree_cap: u32,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// Parameter: rational, or `r + s*sqrtN`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "minpoly", required_unless_present = "minpoly")]
    pub c: Option<String>,
    /// Decide every real root of this integer polynomial.
    #[arg(long, allow_hyphen_values = true)]
    pub minpoly: Option<String>,
    /// Iteration budget for rational parameters.
    #[arg(long, default_value_t = 100_000)]
    pub budget: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CantorArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, default_value_t = 4)]
    pub depth: u32,
    /// Endpoint isolation width.
    #[arg(long, default_value = "1/1000000000000")]
    pub eps: String,
    /// Count the roots of squarefree(F_{M,depth}) in each interval.
    #[arg(long, value_name = "M")]
    pub localize: Option<u32>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CapacityArgs {
    /// Real interval "a,b".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha", required_unless_present = "alpha")]
    pub interval: Option<String>,
    /// Lemniscate capacities of {|psi_k(c)| <= R_alpha} for k = 1..n.
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    pub alpha: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Also optimize n Fekete points on the interval.
    #[arg(long, requires = "interval", requires = "n")]
    pub fekete: bool,
    #[arg(long, default_value_t = 8)]
    pub restarts: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct DegreeBoundArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub interval: String,
    #[arg(long, default_value_t = DEFAULT_CRITERION_CAP)]
    pub cap: u32,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated criterion numbers.
    #[arg(long, value_delimiter = ',')]
    pub only: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute { kind: String, message: String },
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute { kind, message } => write!(f, "computation failed [{kind}]: {message}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.0)
    }
}

impl From<prep_atlas_core::Error> for CliError {
    fn from(e: prep_atlas_core::Error) -> Self {
        let debug = format!("{e:?}");
        let kind = debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string();
        CliError::Compute { kind, message: e.to_string() }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Compute { kind: "Csv".into(), message: e.to_string() }
    }
}

fn formats(f: Format, allowed: &[Format], cmd: &str) -> Result<(), CliError> {
    if allowed.contains(&f) {
        Ok(())
    } else {
        let names: Vec<String> = allowed.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
        Err(CliError::Usage(format!("{cmd} supports --format {}", names.join("|"))))
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cfg) {
        Ok((bytes, code)) => match emit(&cfg, &bytes) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn emit(cfg: &RunConfig, bytes: &[u8]) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => std::fs::write(path, bytes).map_err(CliError::Io),
        None => std::io::stdout().write_all(bytes).map_err(CliError::Io),
    }
}

/// Output bytes plus the exit code to report on success.
pub fn execute(cfg: &RunConfig) -> Result<(Vec<u8>, i32), CliError> {
    if let Some(bits) = cfg.precision {
        set_default_precision(bits);
    }
    if let Some(t) = cfg.threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match &cfg.command {
        Command::Render(a) => render(a).map(|b| (b, 0)),
        Command::PrepRoots(a) => prep_roots_cmd(a).map(|b| (b, 0)),
        Command::Decide(a) => decide(a).map(|b| (b, 0)),
        Command::Cantor(a) => cantor(a).map(|b| (b, 0)),
        Command::Capacity(a) => capacity(a).map(|b| (b, 0)),
        Command::DegreeBound(a) => degree_bound_cmd(a).map(|b| (b, 0)),
        Command::Classify(a) => classify(a).map(|b| (b, 0)),
        Command::VerifyPaper(a) => verify(a),
    }
}

fn render(a: &RenderArgs) -> Result<Vec<u8>, CliError> {
    formats(a.format, &[Format::Pgm, Format::Csv], "render")?;
    let alpha = parse::parse_rational(&a.alpha)?;
    let [x0, x1, y0, y1] = parse::parse_window(&a.window)?;
    let window = Window::new(x0, x1, y0, y1).map_err(|e| CliError::Usage(e.to_string()))?;
    let res = parse::parse_resolution(&a.res)?;
    let grid = escape_grid(&alpha, &window, res, a.max_iter)?;
    Ok(match a.format {
        Format::Pgm => output::pgm(&grid),
        _ => output::grid_csv(&grid)?,
    })
}

#[derive(Serialize)]
struct RootRow {
    index: usize,
    re: f64,
    im: f64,
    modulus: f64,
    residual: f64,
}

fn prep_roots_cmd(a: &PrepRootsArgs) -> Result<Vec<u8>, CliError> {
    formats(a.format, &[Format::Table, Format::Json, Format::Csv], "prep-roots")?;
    let alpha = parse::parse_rational(&a.alpha)?;
    if a.m >= a.n {
        return Err(CliError::Usage("need m < n".into()));
    }
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let cfg = RootFinderConfig { seed: a.seed, degree_cap: a.degree_cap, ..RootFinderConfig::default() };
    let set = prep_roots_with(&alpha, a.m, a.n, a.tol, &cfg)?;
    let disc = verify_in_disc(&set, a.tol)?;
    let view = RootSetView::of(&set, &disc);
    Ok(match a.format {
        Format::Json => output::json(&view),
        Format::Csv => {
            let rows: Vec<RootRow> = view
                .roots
                .iter()
                .enumerate()
                .map(|(index, r)| RootRow { index, re: r.re, im: r.im, modulus: r.modulus, residual: r.residual })
                .collect();
            output::records_csv(&rows)?
        }
        _ => {
            let rows: Vec<Vec<String>> = view
                .roots
                .iter()
                .enumerate()
                .map(|(i, r)| vec![i.to_string(), format!("{:+.15}", r.re), format!("{:+.15}", r.im), format!("{:.3e}", r.residual)])
                .collect();
            let mut s = format!(
                "F_({},{}) for alpha = {}: {} distinct roots, {} real; max |c| = {:.12} <= R = {:.12}\n\n",
                view.m, view.n, view.alpha, view.squarefree_degree, view.real_count, view.max_modulus, view.escape_radius
            );
            s.push_str(&output::table(&["#", "re", "im", "residual"], &rows));
            s.into_bytes()
        }
    })
}

fn decide(a: &DecideArgs) -> Result<Vec<u8>, CliError> {
    formats(a.format, &[Format::Table, Format::Json], "decide")?;
    let alpha = parse::parse_rational(&a.alpha)?;
    if let Some(c) = &a.c {
        let surd = parse::parse_surd(c)?;
        let real = surd.to_real()?;
        if let Some(q) = real.as_rational() {
            let rec = decide_rational(&alpha, q, a.budget);
            let view = RationalDecisionView::of(&alpha, q, &rec);
            return Ok(match a.format {
                Format::Json => output::json(&view),
                _ => format!("alpha = {}, c = {}: {}\n", view.alpha, view.c, view.verdict.short()).into_bytes(),
            });
        }
        let decision = decide_algebraic(&alpha, real.minpoly())?;
        let mut view = AlgebraicDecisionView::of(&decision);
        let keep: Vec<bool> =
            decision.roots.iter().map(|r| alg_compare(&r.root, &real) == std::cmp::Ordering::Equal).collect();
        let mut k = keep.iter();
        view.roots.retain(|_| *k.next().unwrap());
        return Ok(algebraic_out(&view, a.format));
    }
    let p = parse::parse_polynomial(a.minpoly.as_deref().unwrap_or_default())?;
    let decision = decide_algebraic(&alpha, &p)?;
    Ok(algebraic_out(&AlgebraicDecisionView::of(&decision), a.format))
}

fn algebraic_out(view: &AlgebraicDecisionView, format: Format) -> Vec<u8> {
    if format == Format::Json {
        return output::json(view);
    }
    let rows: Vec<Vec<String>> =
        view.roots.iter().map(|r| vec![r.root.short(), r.factor.clone(), r.verdict.short()]).collect();
    let mut s = format!("alpha = {}, polynomial {}\n\n", view.alpha, view.polynomial);
    s.push_str(&output::table(&["c", "factor", "verdict"], &rows));
    s.into_bytes()
}

#[derive(Serialize)]
struct CantorRow {
    index: usize,
    left: f64,
    left_lo: f64,
    left_hi: f64,
    right: f64,
    right_lo: f64,
    right_hi: f64,
    left_tag: String,
    right_tag: String,
    roots: Option<usize>,
}

fn cantor(a: &CantorArgs) -> Result<Vec<u8>, CliError> {
    formats(a.format, &[Format::Table, Format::Json, Format::Csv], "cantor")?;
    let alpha = parse::parse_rational(&a.alpha)?;
    let eps = parse::parse_rational(&a.eps)?;
    if eps <= Rational::from_integer(0.into()) {
        return Err(CliError::Usage("--eps must be positive".into()));
    }
    if let Some(m) = a.localize {
        if m >= a.depth {
            return Err(CliError::Usage("--localize M needs M < depth".into()));
        }
    }
    let level = cantor_level(&alpha, a.depth, &eps)?;
    let loc = a.localize.map(|m| localize_in(&level, m)).transpose()?;
    let view = CantorView::of(&level, loc.as_ref());
    Ok(match a.format {
        Format::Json => output::json(&view),
        Format::Csv => {
            let rows: Vec<CantorRow> = view
                .intervals
                .iter()
                .enumerate()
                .map(|(index, iv)| CantorRow {
                    index,
                    left: iv.left.approx,
                    left_lo: iv.left.enclosure.lo,
                    left_hi: iv.left.enclosure.hi,
                    right: iv.right.approx,
                    right_lo: iv.right.enclosure.lo,
                    right_hi: iv.right.enclosure.hi,
                    left_tag: iv.left_tag.short(),
                    right_tag: iv.right_tag.short(),
                    roots: iv.roots,
                })
                .collect();
            output::records_csv(&rows)?
        }
        _ => {
            let rows: Vec<Vec<String>> = view
                .intervals
                .iter()
                .enumerate()
                .map(|(i, iv)| {
                    vec![
                        i.to_string(),
                        iv.left.short(),
                        iv.right.short(),
                        format!("{} / {}", iv.left_tag.short(), iv.right_tag.short()),
                        iv.roots.map(|k| k.to_string()).unwrap_or_default(),
                    ]
                })
                .collect();
            let mut s = format!("C_{} for alpha = {}: {} intervals\n", view.depth, view.alpha, view.intervals.len());
            if let Some(l) = &view.localization {
                s.push_str(&format!(
                    "squarefree F_({},{}): degree {}, {} real roots, {} outside\n",
                    l.m, l.n, l.degree, l.real_roots, l.outside
                ));
            }
            s.push('\n');
            s.push_str(&output::table(&["#", "left", "right", "boundary", "roots"], &rows));
            s.into_bytes()
        }
    })
}

fn capacity(a: &CapacityArgs) -> Result<Vec<u8>, CliError> {
    formats(a.format, &[Format::Table, Format::Json], "capacity")?;
    let mut view = CapacityView::default();
    let mut lines: Vec<String> = Vec::new();
    if let Some(n) = a.n {
        if n == 0 {
            return Err(CliError::Usage("--n must be positive".into()));
        }
    }
    if let Some(alpha) = &a.alpha {
        let alpha = parse::parse_rational(alpha)?;
        let n = a.n.unwrap_or(1);
        view.alpha = Some(alpha.to_string());
        for k in 1..=n {
            let cap = lemniscate_capacity(&alpha, k)?;
            let e = Enclosure::of(&cap);
            lines.push(format!("lemniscate n = {k}: capacity in [{:.15}, {:.15}]", e.lo, e.hi));
            view.lemniscate.push((k, e));
        }
    }
    if let Some(iv) = &a.interval {
        let (lo, hi) = parse::parse_interval(iv)?;
        let cap = interval_capacity(&lo, &hi)?;
        let capv = RealView::of(&cap);
        lines.push(format!("interval capacity = {}", capv.short()));
        view.interval = Some((RealView::of(&lo), RealView::of(&hi)));
        view.interval_capacity = Some(capv);
        if let Some(n) = a.n {
            for k in 2..=n {
                let d = exact_n_diameter(&lo, &hi, k)?;
                let e = Enclosure::of(&d);
                lines.push(format!("n-diameter n = {k}: [{:.15}, {:.15}]", e.lo, e.hi));
                view.n_diameters.push((k, e));
            }
            if a.fekete {
                if n < 2 {
                    return Err(CliError::Usage("--fekete needs --n >= 2".into()));
                }
                let set = FeketeSet::Intervals(vec![(lo.to_f64(), hi.to_f64())]);
                let cfg = FeketeConfig { restarts: a.restarts.max(1), seed: a.seed, ..FeketeConfig::default() };
                let conf = fekete_optimize(&set, n as usize, &cfg)?;
                let exact = exact_n_diameter(&lo, &hi, n)?;
                let f = FeketeView::of(&conf, Some(&exact));
                let pts: Vec<String> = f.points.iter().map(|p| format!("{:.9}", p.0)).collect();
                lines.push(format!("Fekete n = {n}: diameter estimate {:.12}; points {}", f.diameter_estimate, pts.join(" ")));
                view.fekete = Some(f);
            }
        }
    }
    Ok(match a.format {
        Format::Json => output::json(&view),
        _ => (lines.join("\n") + "\n").into_bytes(),
    })
}

#[derive(Serialize)]
struct CriterionCsvRow {
    n: u32,
    a_n_lo: f64,
    a_n_hi: f64,
    b_n: f64,
    a_below_b: bool,
    ratio_below: bool,
}

fn degree_bound_cmd(a: &DegreeBoundArgs) -> Result<Vec<u8>, CliError> {
    formats(a.format, &[Format::Table, Format::Json, Format::Csv], "degree-bound")?;
    let (lo, hi) = parse::parse_interval(&a.interval)?;
    let rep = degree_bound_with_cap(&lo, &hi, a.cap)?;
    let view = CriterionView::of(&rep);
    Ok(match a.format {
        Format::Json => output::json(&view),
        Format::Csv => {
            let rows: Vec<CriterionCsvRow> = view
                .table
                .iter()
                .map(|r| CriterionCsvRow {
                    n: r.n,
                    a_n_lo: r.a_n.lo,
                    a_n_hi: r.a_n.hi,
                    b_n: r.b_n_approx,
                    a_below_b: r.a_below_b,
                    ratio_below: r.ratio_below,
                })
                .collect();
            output::records_csv(&rows)?
        }
        _ => {
            let rows: Vec<Vec<String>> = view
                .table
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        format!("{:.6e}", 0.5 * (r.a_n.lo + r.a_n.hi)),
                        format!("{:.1e}", r.a_n.width),
                        format!("{:.6e}", r.b_n_approx),
                        r.a_below_b.to_string(),
                        r.ratio_below.to_string(),
                    ]
                })
                .collect();
            let mut s = format!("interval [{}, {}]\n\n", view.interval.0.short(), view.interval.1.short());
            s.push_str(&output::table(&["n", "a_n", "width", "b_n", "a_n < b_n", "ratio test"], &rows));
            s.push_str(&format!("\ncertified = {}\n", view.certified));
            match view.n0 {
                Some(n0) => s.push_str(&format!("n0 = {n0}\n")),
                None => s.push_str(&format!("n0 not found up to {}\n", a.cap)),
            }
            s.into_bytes()
        }
    })
}

#[derive(Serialize)]
struct ClassifyRow {
    minpoly: String,
    root: f64,
    root_lo: f64,
    root_hi: f64,
    m: u32,
    n: u32,
    cross_checked: bool,
}

fn classify(a: &ClassifyArgs) -> Result<Vec<u8>, CliError> {
    formats(a.format, &[Format::Table, Format::Json, Format::Csv], "classify")?;
    let alpha = parse::parse_rational(&a.alpha)?;
    let res = classify_totally_real_prep(&alpha)?;
    let view = ClassificationView::of(&res);
    Ok(match a.format {
        Format::Json => output::json(&view),
        Format::Csv => {
            let rows: Vec<ClassifyRow> = view
                .parameters
                .iter()
                .flat_map(|p| {
                    p.roots.iter().map(move |r| ClassifyRow {
                        minpoly: p.minpoly.clone(),
                        root: r.approx,
                        root_lo: r.enclosure.lo,
                        root_hi: r.enclosure.hi,
                        m: p.m,
                        n: p.n,
                        cross_checked: p.cross_checked,
                    })
                })
                .collect();
            output::records_csv(&rows)?
        }
        _ => {
            let rows: Vec<Vec<String>> = view
                .parameters
                .iter()
                .flat_map(|p| {
                    p.roots.iter().map(move |r| vec![r.short(), p.minpoly.clone(), format!("({}, {})", p.m, p.n)])
                })
                .collect();
            let mut s = format!(
                "alpha = {}: interval [{}, {}], degree bound {}, shift {}\n",
                view.alpha,
                view.interval.0.short(),
                view.interval.1.short(),
                view.degree_bound,
                view.kronecker_shift
            );
            s.push_str(&format!(
                "{} candidates: {} accepted, {} rejected\n\n",
                view.candidates_considered.len(),
                view.accepted.len(),
                view.rejected.len()
            ));
            s.push_str(&output::table(&["c", "minimal polynomial", "witness (m, n)"], &rows));
            for n in &view.notes {
                s.push_str(&format!("\nnote: {n}\n"));
            }
            s.into_bytes()
        }
    })
}

fn verify(a: &VerifyArgs) -> Result<(Vec<u8>, i32), CliError> {
    formats(a.format, &[Format::Table, Format::Json], "verify-paper")?;
    if let Some(ids) = &a.only {
        if let Some(bad) = ids.iter().find(|i| !acceptance::CRITERIA.iter().any(|c| c.id == **i)) {
            return Err(CliError::Usage(format!("no criterion {bad}")));
        }
    }
    let outcomes = acceptance::run_all(a.only.as_deref());
    let code = if outcomes.iter().all(|o| o.passed) { 0 } else { 1 };
    let bytes = match a.format {
        Format::Json => output::json(&outcomes),
        _ => {
            let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            let passed = outcomes.iter().filter(|o| o.passed).count();
            s.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
            s.into_bytes()
        }
    };
    Ok((bytes, code))
}

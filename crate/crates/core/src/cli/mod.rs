//! The `hadamard` command-line front end.
//!
//! Exit codes: 0 when the checked relation holds, 1 when it fails, 2 for
//! usage, parse and domain errors.

pub mod format;
pub mod sweep;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use self::format::{fmt_num, fmt_opt};
use self::sweep::{run_sweep, write_csv, Axis, SweepGrid, SweepRow, SweepSummary, XAxis, CSV_HEADER};
use crate::bounds::{check_bound, BoundId, BoundParams, CheckOptions, HypothesisCheck};
use crate::error::Error;
use crate::funcmodel::{classify, parse_expression, ConvexityCertificate, ConvexityClass, FunctionModel, SParameter};
use crate::hadamard::{hh_check, shh_check, verify_identity, ClassicReport, Direction, IdentityReport, DEFAULT_COMPARE_TOLERANCE};
use crate::means::{
    arithmetic_mean, generalized_log_mean, geometric_mean, identric_mean, MeanExponent, PositiveInterval,
};
use crate::props::{proposition, PropositionReport};
use crate::quadrature::{Integrator, DEFAULT_MAX_EVALS, DEFAULT_TOLERANCE};

pub const EXIT_HOLDS: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "hadamard", version, about = "Check Hadamard-type integral inequalities")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Additive slack for inequality and identity comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_COMPARE_TOLERANCE)]
    pub tol: f64,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub quad_tol: f64,
    /// Quadrature evaluation budget.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_EVALS)]
    pub max_evals: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub out: OutputFormat,
    /// Seed for randomized sweep points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic, geometric, identric and generalized logarithmic means.
    Means {
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        #[arg(long)]
        p: Option<f64>,
    },
    /// Compare both sides of the two-point identity.
    Identity {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        #[arg(long)]
        x: f64,
    },
    /// Hermite-Hadamard chain, or its s-convex form with `--s`.
    Classic {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        #[arg(long)]
        s: Option<f64>,
        /// Check the reversed chain.
        #[arg(long)]
        concave: bool,
    },
    /// Evaluate one theorem or corollary bound.
    Check {
        /// t1..t8 or c1, c2, c3i, c3ii_tight, c3ii_loose, c4i, c4ii, c4iii_tight, c4iii_loose, c5i, c5ii
        #[arg(long)]
        theorem: String,
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        /// Interior point; fixed by the corollaries.
        #[arg(long)]
        x: Option<f64>,
        #[arg(long)]
        s: Option<f64>,
        #[arg(long)]
        q: Option<f64>,
        /// Derivative bound for c2; sampled when absent.
        #[arg(long)]
        m: Option<f64>,
        #[command(flatten)]
        classify: ClassifyOpts,
    },
    /// Evaluate one bound over a parameter grid.
    Sweep(SweepArgs),
    /// Special-means propositions 1 to 4.
    Prop {
        #[arg(long)]
        id: u8,
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        #[arg(long)]
        s: Option<f64>,
        #[arg(long)]
        q: Option<f64>,
        #[command(flatten)]
        classify: ClassifyOpts,
    },
    /// Sampled convexity test of f, |f'| or |f'|^q.
    Classify {
        #[arg(long = "fn", allow_hyphen_values = true)]
        function: String,
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        /// convex, concave, s-convex or s-concave
        #[arg(long)]
        class: ConvexityClass,
        #[arg(long)]
        s: Option<f64>,
        #[arg(long, value_enum, default_value_t = Target::F)]
        target: Target,
        /// Exponent applied to |f'| with `--target abs-deriv`.
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = 32)]
        grid: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    F,
    AbsDeriv,
}

#[derive(Debug, Args)]
pub struct ClassifyOpts {
    /// Certify the bound's hypothesis on a grid.
    #[arg(long)]
    pub classify: bool,
    /// Points per axis for `--classify`.
    #[arg(long, default_value_t = 32)]
    pub grid: usize,
}

impl ClassifyOpts {
    fn grid(&self) -> Option<usize> {
        self.classify.then_some(self.grid)
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Bound tag, as for `check`.
    #[arg(long)]
    pub theorem: String,
    #[arg(long = "fn", allow_hyphen_values = true)]
    pub function: String,
    /// Left endpoints: value, list or start:stop:count.
    #[arg(long)]
    pub u: Axis,
    #[arg(long)]
    pub v: Axis,
    /// Evenly spaced x points per interval.
    #[arg(long, default_value_t = 33, conflicts_with_all = ["x", "x_random"])]
    pub x_count: usize,
    /// Explicit x values.
    #[arg(long, conflicts_with = "x_random")]
    pub x: Option<Axis>,
    /// Seeded uniform x draws per interval.
    #[arg(long)]
    pub x_random: Option<usize>,
    /// s values: value, list or start:stop:count.
    #[arg(long)]
    pub s: Option<Axis>,
    #[arg(long)]
    pub q: Option<Axis>,
    #[command(flatten)]
    pub classify: ClassifyOpts,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
    Json(serde_json::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Json(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(Error::NonDifferentiable { u, v, near }) => write!(
                f,
                "warning: f is not differentiable on [{u}, {v}] (kink near {near}); the bounds do not apply"
            ),
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
            Failure::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

type CmdResult = Result<bool, Failure>;

/// Runs the CLI on process-style arguments, writing to stdout and stderr.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_HOLDS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(true) => EXIT_HOLDS,
        Ok(false) => EXIT_FAILS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let g = &cli.global;
    let quad = Integrator {
        abs_tol: g.quad_tol,
        max_evals: g.max_evals,
        ..Integrator::default()
    };
    let options = |classify: Option<usize>| CheckOptions {
        tol: g.tol,
        quad,
        classify_grid: classify,
    };
    match &cli.command {
        Command::Means { u, v, p } => cmd_means(*u, *v, *p, g.out, out),
        Command::Identity { function, u, v, x } => {
            let f = parse_expression(function)?;
            let iv = PositiveInterval::new(*u, *v)?;
            let report = verify_identity(&f, &iv, *x, g.tol, &quad)?;
            render_identity(&report, g.out, out)?;
            Ok(report.holds)
        }
        Command::Classic {
            function,
            u,
            v,
            s,
            concave,
        } => {
            let f = parse_expression(function)?;
            let direction = if *concave {
                Direction::Concave
            } else {
                Direction::Convex
            };
            let report = match s {
                Some(s) => shh_check(&f, *u, *v, SParameter::new(*s)?, direction, g.tol, &quad)?,
                None => hh_check(&f, *u, *v, direction, g.tol, &quad)?,
            };
            render_classic(&report, g.out, out)?;
            Ok(report.holds)
        }
        Command::Check {
            theorem,
            function,
            u,
            v,
            x,
            s,
            q,
            m,
            classify,
        } => {
            let id: BoundId = theorem.parse()?;
            let f = parse_expression(function)?;
            let iv = PositiveInterval::new(*u, *v)?;
            let params = BoundParams {
                x: *x,
                s: *s,
                q: *q,
                m: *m,
            };
            let report = check_bound(id, &f, &iv, &params, &options(classify.grid()))?;
            let row = SweepRow::from(report.clone());
            match g.out {
                OutputFormat::Text => {
                    let mut lines = vec![
                        ("theorem", id.to_string()),
                        ("interval", format!("[{}, {}]", fmt_num(iv.u()), fmt_num(iv.v()))),
                        ("x", fmt_num(report.x)),
                    ];
                    if report.s.is_some() {
                        lines.push(("s", fmt_opt(report.s)));
                    }
                    if report.q.is_some() {
                        lines.push(("q", fmt_opt(report.q)));
                    }
                    lines.extend(report_lines(report.lhs, report.rhs, report.margin, report.ratio, report.holds));
                    lines.extend(hypothesis_lines(&report.hypothesis));
                    write_pairs(out, &lines)?;
                }
                OutputFormat::Csv => write_csv(&mut *out, std::slice::from_ref(&row))?,
                OutputFormat::Json => write_json(out, &report)?,
            }
            Ok(report.holds)
        }
        Command::Sweep(args) => cmd_sweep(args, g, options(args.classify.grid()), out, err),
        Command::Prop {
            id,
            u,
            v,
            s,
            q,
            classify,
        } => {
            let iv = PositiveInterval::new(*u, *v)?;
            let report = proposition(*id, &iv, *s, *q, &options(classify.grid()))?;
            render_prop(&report, g.out, out)?;
            Ok(report.holds)
        }
        Command::Classify {
            function,
            u,
            v,
            class,
            s,
            target,
            q,
            grid,
        } => {
            let f = parse_expression(function)?;
            let iv = PositiveInterval::new(*u, *v)?;
            let s = s.map(SParameter::new).transpose()?;
            let cert = match target {
                Target::F => {
                    f.probe_values(iv.u(), iv.v())?;
                    classify(|x| f.eval(x), &iv, *class, s, *grid)?
                }
                Target::AbsDeriv => {
                    f.probe(iv.u(), iv.v())?;
                    let e = q.unwrap_or(1.0);
                    classify(|x| f.deriv(x).abs().powf(e), &iv, *class, s, *grid)?
                }
            };
            render_certificate(&cert, g.out, out)?;
            Ok(cert.passes())
        }
    }
}

fn cmd_means(u: f64, v: f64, p: Option<f64>, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let iv = PositiveInterval::new(u, v)?;
    let p = p.map(MeanExponent::new).transpose()?;

    #[derive(Serialize)]
    struct Means {
        u: f64,
        v: f64,
        arithmetic: f64,
        geometric: f64,
        identric: f64,
        p: Option<f64>,
        generalized_log: Option<f64>,
    }
    let means = Means {
        u,
        v,
        arithmetic: arithmetic_mean(&iv),
        geometric: geometric_mean(&iv),
        identric: identric_mean(&iv),
        p: p.map(MeanExponent::get),
        generalized_log: p.map(|p| generalized_log_mean(&iv, p)),
    };
    let mut lines = vec![
        ("A", fmt_num(means.arithmetic)),
        ("G", fmt_num(means.geometric)),
        ("I", fmt_num(means.identric)),
    ];
    if let (Some(p), Some(l)) = (means.p, means.generalized_log) {
        lines.push(("p", fmt_num(p)));
        lines.push(("L_p", fmt_num(l)));
    }
    match fmt {
        OutputFormat::Text => write_pairs(out, &lines)?,
        OutputFormat::Csv => write_csv_pairs(out, &lines)?,
        OutputFormat::Json => write_json(out, &means)?,
    }
    Ok(true)
}

fn cmd_sweep(
    args: &SweepArgs,
    g: &GlobalOpts,
    opts: CheckOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let id: BoundId = args.theorem.parse()?;
    let f: FunctionModel = parse_expression(&args.function)?;
    let x = match (&args.x, args.x_random) {
        (Some(axis), _) => XAxis::Values(axis.clone()),
        (None, Some(count)) => XAxis::Random {
            count,
            seed: g.seed,
        },
        (None, None) => XAxis::Uniform(args.x_count),
    };
    let grid = SweepGrid {
        u: args.u.clone(),
        v: args.v.clone(),
        x,
        s: args.s.clone(),
        q: args.q.clone(),
    };
    let rows = run_sweep(id, &f, &grid, &opts)?;
    let summary = SweepSummary::of(&rows);

    let mut file;
    let sink: &mut dyn Write = match &args.output {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => out,
    };
    match g.out {
        OutputFormat::Csv => write_csv(&mut *sink, &rows)?,
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct SweepOutput<'a> {
                version: &'static str,
                rows: &'a [SweepRow],
                summary: SweepSummary,
            }
            write_json(
                sink,
                &SweepOutput {
                    version: env!("CARGO_PKG_VERSION"),
                    rows: &rows,
                    summary,
                },
            )?;
        }
        OutputFormat::Text => {
            writeln!(sink, "{}", CSV_HEADER.join("  "))?;
            for row in &rows {
                writeln!(sink, "{}", row.csv_record().join("  "))?;
            }
        }
    }
    sink.flush()?;
    writeln!(
        err,
        "{} rows, {} failing; ratio min {} mean {} max {}",
        summary.rows,
        summary.failures,
        fmt_num(summary.ratio_min),
        fmt_num(summary.ratio_mean),
        fmt_num(summary.ratio_max)
    )?;
    Ok(summary.failures == 0)
}

fn report_lines(lhs: f64, rhs: f64, margin: f64, ratio: f64, holds: bool) -> Vec<(&'static str, String)> {
    vec![
        ("lhs", fmt_num(lhs)),
        ("rhs", fmt_num(rhs)),
        ("margin", fmt_num(margin)),
        ("ratio", fmt_num(ratio)),
        ("holds", holds.to_string()),
    ]
}

fn hypothesis_lines(h: &HypothesisCheck) -> Vec<(&'static str, String)> {
    let mut lines = vec![("hypothesis", h.status())];
    if let HypothesisCheck::Certified { target, certificate } = h {
        lines.push(("hypothesis_target", format!("{target} {}", certificate.class_tested)));
        lines.push(("max_violation", fmt_num(certificate.max_violation)));
        if let Some((x, y, t)) = certificate.counterexample {
            lines.push((
                "counterexample",
                format!("x={} y={} t={}", fmt_num(x), fmt_num(y), fmt_num(t)),
            ));
        }
    }
    lines
}

fn render_identity(r: &IdentityReport, fmt: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let lines = [
        ("lhs", fmt_num(r.lhs)),
        ("rhs", fmt_num(r.rhs)),
        ("residual", fmt_num(r.residual)),
        ("tol", fmt_num(r.tol)),
        ("holds", r.holds.to_string()),
    ];
    match fmt {
        OutputFormat::Text => write_pairs(out, &lines),
        OutputFormat::Csv => write_csv_pairs(out, &lines),
        OutputFormat::Json => write_json(out, r),
    }
}

fn render_classic(r: &ClassicReport, fmt: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let mut lines = vec![("interval", format!("[{}, {}]", fmt_num(r.u), fmt_num(r.v)))];
    if let Some(s) = r.s {
        lines.push(("s", fmt_num(s)));
    }
    lines.extend([
        ("direction", format!("{:?}", r.direction).to_lowercase()),
        ("left", fmt_num(r.left)),
        ("middle", fmt_num(r.middle)),
        ("right", fmt_num(r.right)),
        ("left_holds", r.left_holds.to_string()),
        ("right_holds", r.right_holds.to_string()),
        ("holds", r.holds.to_string()),
    ]);
    match fmt {
        OutputFormat::Text => write_pairs(out, &lines),
        OutputFormat::Csv => write_csv_pairs(out, &lines),
        OutputFormat::Json => write_json(out, r),
    }
}

fn render_prop(r: &PropositionReport, fmt: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let mut lines = vec![
        ("proposition", r.id.to_string()),
        ("interval", format!("[{}, {}]", fmt_num(r.u), fmt_num(r.v))),
    ];
    if let Some(s) = r.s {
        lines.push(("s", fmt_num(s)));
    }
    if let Some(q) = r.q {
        lines.push(("q", fmt_num(q)));
    }
    lines.push(("lhs", fmt_num(r.lhs)));
    lines.push(("rhs_corollary_substitution", fmt_num(r.rhs)));
    lines.push(("rhs_as_printed", fmt_num(r.rhs_as_printed)));
    if r.discrepancy {
        lines.push((
            "note",
            "simplified closed form differs from the corollary substitution".to_string(),
        ));
    }
    lines.push(("margin", fmt_num(r.margin)));
    lines.push(("ratio", fmt_num(r.ratio)));
    lines.push(("holds", r.holds.to_string()));
    lines.extend(hypothesis_lines(&r.hypothesis));
    match fmt {
        OutputFormat::Text => write_pairs(out, &lines),
        OutputFormat::Csv => write_csv_pairs(out, &lines),
        OutputFormat::Json => write_json(out, r),
    }
}

fn render_certificate(c: &ConvexityCertificate, fmt: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let mut lines = vec![("class", c.class_tested.to_string())];
    if let Some(s) = c.s {
        lines.push(("s", fmt_num(s)));
    }
    lines.push(("grid", c.grid_size.to_string()));
    lines.push(("max_violation", fmt_num(c.max_violation)));
    if let Some((x, y, t)) = c.counterexample {
        lines.push(("counterexample", format!("x={} y={} t={}", fmt_num(x), fmt_num(y), fmt_num(t))));
    }
    lines.push(("status", c.status()));
    match fmt {
        OutputFormat::Text => write_pairs(out, &lines),
        OutputFormat::Csv => write_csv_pairs(out, &lines),
        OutputFormat::Json => write_json(out, c),
    }
}

fn write_pairs(out: &mut dyn Write, lines: &[(&str, String)]) -> Result<(), Failure> {
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in lines {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

fn write_csv_pairs(out: &mut dyn Write, lines: &[(&str, String)]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["name", "value"])?;
    for (k, v) in lines {
        w.write_record([*k, v.as_str()])?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

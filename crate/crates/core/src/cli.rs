//! Command-line front end. [`run`] returns the text to print and the exit
//! code: 0 when every check passes, 1 when a mathematical check fails, 2 on
//! usage or input errors.

use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{
    preset_with, run_suites, CatalogError, Preset, PresetParams, SuiteOptions, PRESET_NAMES,
};
use crate::homog::{homogenize, homogenize_sequence};
use crate::poly::{parse_assignment, Assignment, PolyMatrix, Polynomial, VarSet};
use crate::recmatrix::{build_triangle, hankel, jacobi_matrix};
use crate::series::compare_riordan_column;
use crate::totalpos::{
    check_lemma_key, check_tridiagonal_xtp, check_xtp_with, default_order, TPReport, TpOptions,
};
use crate::weights::WeightSystem;

#[derive(Debug, Parser)]
#[command(name = "stieltjes", version, about = "Catalan-like polynomial triangles and x-total positivity")]
pub struct RunConfig {
    /// Worker threads for minor enumeration and suites (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the triangle m_{n,k} or its first column.
    Gen {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short = 'N', long = "N", default_value_t = 5)]
        n: usize,
        /// Only the first column m_{n,0}.
        #[arg(long)]
        column: bool,
        /// Evaluate at a point, e.g. `q=2` or `p=1,q=2`.
        #[arg(long)]
        at: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the N×N Hankel matrix of the first column.
    Hankel {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short = 'N', long = "N", default_value_t = 3)]
        n: usize,
        #[arg(long)]
        at: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Test all minors up to an order for coefficientwise nonnegativity.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        /// Matrix JSON (a grid of polynomial JSON objects).
        #[arg(long, conflicts_with_all = ["preset", "weights"])]
        matrix: Option<String>,
        /// Check the Hankel matrix of the first column.
        #[arg(long, conflicts_with = "jacobi")]
        hankel: bool,
        /// Check the tridiagonal Jacobi matrix.
        #[arg(long)]
        jacobi: bool,
        #[arg(short = 'N', long = "N", default_value_t = 4)]
        n: usize,
        /// Largest minor order (default min(N, 4)).
        #[arg(long)]
        order: Option<usize>,
        /// Report every violation instead of the first.
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Test the sufficient conditions s_0 ≥ 1, s_i s_{i+1} ≥ t_{i+1} r_{i+1},
    /// s_{i+1} ≥ t_{i+1} r_{i+1} + 1.
    Conditions {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short = 'N', long = "N", default_value_t = 10)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the series solution d(x) with the first column.
    Gf {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short = 'N', long = "N", default_value_t = 10)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Homogenize polynomials, or the first column of a preset (term n to
    /// degree n).
    Homogenize {
        /// Polynomials in the variables given by --vars.
        polys: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long, default_value = "x0")]
        x0: String,
        /// Treat the polynomials as a sequence a_0, a_1, … with deg a_n = n.
        #[arg(long)]
        sequence: bool,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short = 'N', long = "N", default_value_t = 5)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Preset registry and verification suites.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List the preset families.
    List {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the suite of a preset, or of every family with `all`.
    Run {
        name: String,
        #[arg(short = 'N', long = "N", default_value_t = 6)]
        n: usize,
        #[arg(long)]
        order: Option<usize>,
        /// Hankel truncation size (default min(N, 6)).
        #[arg(long = "hankel-size")]
        hankel_size: Option<usize>,
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Registry preset, optionally with parameters such as `ex3_4(5)`.
    #[arg(long)]
    pub preset: Option<String>,
    /// Weight-system JSON: {"vars": [...], "r": "...", "s": "...", "t": "..."}.
    #[arg(long)]
    pub weights: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args, Default)]
pub struct ParamArgs {
    /// u for ex3_4.
    #[arg(long)]
    pub u: Option<u32>,
    /// a for counterexample.
    #[arg(long)]
    pub a: Option<u32>,
    /// b for counterexample.
    #[arg(long)]
    pub b: Option<u32>,
    /// Thresholds for ex3_3_threshold, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub s: Option<Vec<u32>>,
}

impl ParamArgs {
    fn to_params(&self) -> PresetParams {
        PresetParams {
            u: self.u,
            a: self.a,
            b: self.b,
            thresholds: self.s.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Shorthand for --format json.
    #[arg(long)]
    pub json: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

/// Text and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn verdict(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if passed { 0 } else { 1 },
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        }
    }
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Outcome, UsageError>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            };
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        if j == 0 {
            return Outcome::usage("--jobs must be at least 1");
        }
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    pool.install(|| dispatch(config.command)).unwrap_or_else(|e| Outcome::usage(e.0))
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Gen {
            source,
            n,
            column,
            at,
            out,
        } => cmd_gen(&source, n, column, at.as_deref(), out.format()),
        Command::Hankel { source, n, at, out } => cmd_hankel(&source, n, at.as_deref(), out.format()),
        Command::Check {
            source,
            matrix,
            hankel,
            jacobi,
            n,
            order,
            exhaustive,
            out,
        } => cmd_check(&source, matrix.as_deref(), hankel, jacobi, n, order, exhaustive, out.format()),
        Command::Conditions { source, n, out } => cmd_conditions(&source, n, out.format()),
        Command::Gf { source, n, out } => cmd_gf(&source, n, out.format()),
        Command::Homogenize {
            polys,
            vars,
            x0,
            sequence,
            source,
            n,
            out,
        } => cmd_homogenize(&polys, &vars, &x0, sequence, &source, n, out.format()),
        Command::Catalog { action } => cmd_catalog(action),
    }
}

enum Source {
    Preset(Box<Preset>),
    Weights(WeightSystem),
}

impl Source {
    fn weights(&self) -> &WeightSystem {
        match self {
            Source::Preset(p) => &p.weights,
            Source::Weights(w) => w,
        }
    }
}

fn load_source(args: &SourceArgs) -> Result<Source, UsageError> {
    match (&args.preset, &args.weights) {
        (Some(name), None) => Ok(Source::Preset(Box::new(preset_with(
            name,
            &args.params.to_params(),
        )?))),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{path}: {e}")))?;
            Ok(Source::Weights(WeightSystem::from_json(&text)?))
        }
        (None, None) => Err(UsageError("one of --preset or --weights is required".into())),
        (Some(_), Some(_)) => Err(UsageError("--preset and --weights are exclusive".into())),
    }
}

fn load_point(at: Option<&str>, vars: &VarSet) -> Result<Option<Assignment>, UsageError> {
    let Some(text) = at else { return Ok(None) };
    let point = parse_assignment(text).map_err(UsageError)?;
    for name in point.keys() {
        if !vars.contains(name) {
            return Err(UsageError(format!("--at: `{name}` is not a variable of this system")));
        }
    }
    if let Some(missing) = vars.names().iter().find(|v| !point.contains_key(*v)) {
        return Err(UsageError(format!("--at: no value for `{missing}`")));
    }
    Ok(Some(point))
}

fn cell(p: &Polynomial, point: &Option<Assignment>) -> Result<String, UsageError> {
    Ok(match point {
        Some(pt) => p.evaluate(pt)?.to_string(),
        None => p.to_string(),
    })
}

fn cell_json(p: &Polynomial, point: &Option<Assignment>) -> Result<serde_json::Value, UsageError> {
    Ok(match point {
        Some(pt) => json!(p.evaluate(pt)?.to_string()),
        None => serde_json::to_value(p)?,
    })
}

fn cmd_gen(source: &SourceArgs, n: usize, column: bool, at: Option<&str>, fmt: Format) -> CmdResult {
    let src = load_source(source)?;
    let w = src.weights();
    let point = load_point(at, w.vars())?;
    let tri = build_triangle(w, n)?;
    let rows: Vec<Vec<Polynomial>> = if column {
        vec![tri.first_column()]
    } else {
        tri.rows().to_vec()
    };
    let sep = if point.is_some() { " " } else { "; " };
    let out = match fmt {
        Format::Text if column => {
            let cells: Vec<String> = rows[0].iter().map(|p| cell(p, &point)).collect::<Result<_, _>>()?;
            cells.join(sep) + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for row in &rows {
                let cells: Vec<String> = row.iter().map(|p| cell(p, &point)).collect::<Result<_, _>>()?;
                writeln!(s, "{}", cells.join(if point.is_some() { " " } else { ", " }))?;
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,k,value\n");
            for (i, row) in rows.iter().enumerate() {
                for (k, p) in row.iter().enumerate() {
                    let (nn, kk) = if column { (k, 0) } else { (i, k) };
                    writeln!(s, "{nn},{kk},{}", cell(p, &point)?)?;
                }
            }
            s
        }
        Format::Json => {
            let vals: Vec<Vec<serde_json::Value>> = rows
                .iter()
                .map(|r| r.iter().map(|p| cell_json(p, &point)).collect())
                .collect::<Result<_, _>>()?;
            let body = if column {
                json!({"vars": w.vars().names(), "column": vals[0]})
            } else {
                json!({"vars": w.vars().names(), "rows": vals})
            };
            serde_json::to_string(&body)? + "\n"
        }
    };
    Ok(Outcome::ok(out))
}

fn cmd_hankel(source: &SourceArgs, n: usize, at: Option<&str>, fmt: Format) -> CmdResult {
    let src = load_source(source)?;
    let w = src.weights();
    let point = load_point(at, w.vars())?;
    if n == 0 {
        return Err(UsageError("-N must be at least 1".into()));
    }
    let tri = build_triangle(w, 2 * n - 2)?;
    let h = hankel(&tri.first_column(), n)?.matrix;
    Ok(Outcome::ok(render_matrix(&h, &point, fmt)?))
}

fn render_matrix(m: &PolyMatrix, point: &Option<Assignment>, fmt: Format) -> Result<String, UsageError> {
    Ok(match fmt {
        Format::Json if point.is_none() => serde_json::to_string(m)? + "\n",
        Format::Json => {
            let grid: Vec<Vec<String>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(|p| cell(p, point)).collect())
                .collect::<Result<_, _>>()?;
            serde_json::to_string(&grid)? + "\n"
        }
        Format::Csv | Format::Text => {
            let sep = if fmt == Format::Csv { "," } else { ", " };
            let mut s = String::new();
            for i in 0..m.rows() {
                let cells: Vec<String> = m.row(i).iter().map(|p| cell(p, point)).collect::<Result<_, _>>()?;
                if fmt == Format::Text {
                    writeln!(s, "[{}]", cells.join(sep))?;
                } else {
                    writeln!(s, "{}", cells.join(sep))?;
                }
            }
            s
        }
    })
}

fn report_text(rep: &TPReport) -> String {
    let verdict = serde_json::to_value(rep.verdict).expect("verdict serializes");
    let mut s = format!(
        "verdict: {}\norder checked: {}\nminors evaluated: {}\n",
        verdict.as_str().unwrap_or_default(),
        rep.order_checked,
        rep.minors_evaluated
    );
    for v in &rep.violations {
        let _ = writeln!(s, "violation: rows {:?} cols {:?} det {}", v.rows, v.cols, v.det);
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    source: &SourceArgs,
    matrix: Option<&str>,
    hankel_flag: bool,
    jacobi: bool,
    n: usize,
    order: Option<usize>,
    exhaustive: bool,
    fmt: Format,
) -> CmdResult {
    if n == 0 || order == Some(0) {
        return Err(UsageError("-N and --order must be at least 1".into()));
    }
    let opts = TpOptions {
        exhaustive,
        ..TpOptions::default()
    };
    let rep = if let Some(path) = matrix {
        let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{path}: {e}")))?;
        let m: PolyMatrix = serde_json::from_str(&text)?;
        let size = m.rows().min(m.cols());
        check_xtp_with(&m, order.unwrap_or(default_order(size)), &opts)?
    } else {
        let src = load_source(source)?;
        let w = src.weights();
        if jacobi {
            let j = jacobi_matrix(w, n)?;
            match order {
                Some(r) if r < n => check_xtp_with(&j, r, &opts)?,
                _ => check_tridiagonal_xtp(&j)?,
            }
        } else if hankel_flag {
            let tri = build_triangle(w, 2 * n - 2)?;
            let h = hankel(&tri.first_column(), n)?.matrix;
            check_xtp_with(&h, order.unwrap_or(default_order(n)), &opts)?
        } else {
            return Err(UsageError("choose --hankel, --jacobi or --matrix".into()));
        }
    };
    let out = match fmt {
        Format::Json => rep.to_json() + "\n",
        _ => report_text(&rep),
    };
    Ok(Outcome::verdict(out, rep.passed()))
}

fn cmd_conditions(source: &SourceArgs, n: usize, fmt: Format) -> CmdResult {
    let src = load_source(source)?;
    let rep = check_lemma_key(src.weights(), n)?;
    let out = match (fmt, &rep.failure) {
        (Format::Json, None) => json!({"depth": n, "passed": true}).to_string() + "\n",
        (Format::Json, Some(f)) => json!({
            "depth": n,
            "passed": false,
            "condition": f.condition,
            "index": f.index,
            "value": f.value.to_string(),
        })
        .to_string()
            + "\n",
        (_, None) => format!("conditions (i)-(iii) hold for 0 <= i < {n}\n"),
        (_, Some(f)) => format!(
            "condition ({}) fails at i = {}: {}\n",
            ["i", "ii", "iii"][f.condition as usize - 1],
            f.index,
            f.value
        ),
    };
    Ok(Outcome::verdict(out, rep.passed()))
}

fn cmd_gf(source: &SourceArgs, n: usize, fmt: Format) -> CmdResult {
    let src = load_source(source)?;
    let Source::Preset(p) = &src else {
        return Err(UsageError("gf needs a --preset with generating-function parameters".into()));
    };
    let Some(spec) = &p.riordan else {
        return Err(UsageError(format!(
            "preset `{}` is not of the form R(a,b;c,e); use `catalog run` instead",
            p.name
        )));
    };
    let cmp = compare_riordan_column(spec, &p.weights, n)?;
    let all = cmp.iter().all(|c| c.equal());
    let out = match fmt {
        Format::Json => {
            let rows: Vec<_> = cmp
                .iter()
                .map(|c| {
                    json!({
                        "n": c.n,
                        "equal": c.equal(),
                        "series": c.from_series.to_string(),
                        "triangle": c.from_triangle.to_string(),
                    })
                })
                .collect();
            json!({"preset": p.name, "all_equal": all, "coefficients": rows}).to_string() + "\n"
        }
        _ => {
            let mut s = String::new();
            for c in &cmp {
                if c.equal() {
                    writeln!(s, "{}: equal {}", c.n, c.from_series)?;
                } else {
                    writeln!(s, "{}: series {} | triangle {}", c.n, c.from_series, c.from_triangle)?;
                }
            }
            s.push_str(if all { "all-equal\n" } else { "mismatch\n" });
            s
        }
    };
    Ok(Outcome::verdict(out, all))
}

fn cmd_homogenize(
    polys: &[String],
    vars: &[String],
    x0: &str,
    sequence: bool,
    source: &SourceArgs,
    n: usize,
    fmt: Format,
) -> CmdResult {
    let from_source = source.preset.is_some() || source.weights.is_some();
    let (inputs, as_sequence) = if from_source {
        if !polys.is_empty() {
            return Err(UsageError("give polynomials or a source, not both".into()));
        }
        let src = load_source(source)?;
        (build_triangle(src.weights(), n)?.first_column(), true)
    } else {
        if vars.is_empty() {
            return Err(UsageError("--vars is required for explicit polynomials".into()));
        }
        let vs = VarSet::new(vars.iter().cloned())?;
        let ps = polys
            .iter()
            .map(|t| Polynomial::parse(&vs, t))
            .collect::<Result<Vec<_>, _>>()?;
        (ps, sequence)
    };
    let lifted = if as_sequence {
        homogenize_sequence(&inputs, x0)?
    } else {
        inputs.iter().map(|p| homogenize(p, x0)).collect::<Result<_, _>>()?
    };
    let out = match fmt {
        Format::Json => serde_json::to_string(&lifted)? + "\n",
        _ => lifted.iter().map(|p| p.to_string() + "\n").collect(),
    };
    Ok(Outcome::ok(out))
}

fn cmd_catalog(action: CatalogAction) -> CmdResult {
    match action {
        CatalogAction::List { out } => {
            let mut rows = Vec::new();
            for name in PRESET_NAMES {
                let p = preset_with(name, &PresetParams::default())?;
                rows.push((name.to_string(), p.name.clone(), p.summary.clone()));
            }
            let text = match out.format() {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(f, d, s)| json!({"family": f, "default": d, "summary": s}))
                        .collect();
                    serde_json::to_string(&v)? + "\n"
                }
                _ => rows
                    .iter()
                    .map(|(f, d, s)| {
                        if f == d {
                            format!("{f:<18} {s}\n")
                        } else {
                            format!("{f:<18} {s} (default {d})\n")
                        }
                    })
                    .collect(),
            };
            Ok(Outcome::ok(text))
        }
        CatalogAction::Run {
            name,
            n,
            order,
            hankel_size,
            exhaustive,
            params,
            out,
        } => {
            if n == 0 || order == Some(0) || hankel_size == Some(0) {
                return Err(UsageError("-N, --order and --hankel-size must be at least 1".into()));
            }
            let presets: Vec<Preset> = if name == "all" {
                PRESET_NAMES
                    .iter()
                    .map(|f| preset_with(f, &PresetParams::default()))
                    .collect::<Result<_, CatalogError>>()?
            } else {
                vec![preset_with(&name, &params.to_params())?]
            };
            let opts = SuiteOptions {
                order,
                hankel_size,
                exhaustive,
                ..SuiteOptions::new(n)
            };
            let reports = run_suites(&presets, &opts);
            let passed = reports.iter().all(|r| r.passed);
            let text = match out.format() {
                Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
                Format::Json => serde_json::to_string_pretty(&reports)? + "\n",
                _ => reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n"),
            };
            Ok(Outcome::verdict(text, passed))
        }
    }
}

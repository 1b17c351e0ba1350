//! The `abeta` command line: bound evaluation, radii, verification runs and
//! curve data.
//!
//! JSON output is one object per line with numbers rounded to 12 significant
//! digits; CSV uses LF line endings. Exit status is 0 on success, 1 when a
//! verification or Table 1 check fails, and 2 on usage or domain errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::bounds::Theorem;
use crate::carath::BetaParam;
use crate::error::Error;
use crate::extremal::ftilde_eval;
use crate::radii::{self, CurveKind, RadiusResult};
use crate::verify::{self, VerifyReport};

/// Published Bohr radii (`m = 1`) for the seven tabulated `β`.
pub const TABLE1: [(f64, f64); 7] = [
    (0.1, 0.267139),
    (0.2, 0.24766),
    (0.3, 0.22655),
    (0.5, 0.178366),
    (0.7, 0.119726),
    (0.8, 0.085113),
    (0.9, 0.0457777),
];
/// Allowed `|computed − published|` for Table 1.
pub const TABLE1_TOL: f64 = 1e-4;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "abeta",
    version,
    about = "Coefficient bounds, growth estimates and Bohr radii for the class A_beta"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a bound, with witness-checked sharpness.
    Bounds(BoundsArgs),
    /// Solve for a Bohr or Bohr-Rogosinski radius.
    Radii(RadiiArgs),
    /// Check bounds against sampled functions and extremal witnesses.
    Verify(VerifyArgs),
    /// Emit `beta,radius` CSV over a grid.
    Curve(CurveArgs),
    /// Evaluate the extremal function ftilde at a point.
    Ftilde(FtildeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TheoremParams {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    /// Power `N` of the coefficient-difference functional.
    #[arg(long = "N", alias = "power", default_value_t = 1)]
    pub power: u32,
    /// Real first Caratheodory coefficient for coeff-diff.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<f64>,
    /// Radius for the growth bounds.
    #[arg(long)]
    pub r: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// coeff, hankel-mu, h2, zalcman, toeplitz2, toeplitz3, t31-upper,
    /// t31-lower, coeff-diff, growth-lower, growth-upper, re-fz-lower, re-fz-upper
    #[arg(long)]
    pub theorem: String,
    #[arg(long)]
    pub beta: f64,
    #[command(flatten)]
    pub params: TheoremParams,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RadiiArgs {
    #[arg(long, conflicts_with_all = ["rogosinski", "table1"])]
    pub bohr: bool,
    /// Bohr-Rogosinski radius with coefficient tail starting at `N`.
    #[arg(long, value_name = "N", conflicts_with = "table1")]
    pub rogosinski: Option<usize>,
    /// Recompute the published Table 1 and compare.
    #[arg(long)]
    pub table1: bool,
    #[arg(long, required_unless_present = "table1")]
    pub beta: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A bound id as for `bounds`, or zalcman-surface, t31-surface, growth.
    #[arg(long, required_unless_present = "full")]
    pub theorem: Option<String>,
    #[arg(long, required_unless_present = "full")]
    pub beta: Option<f64>,
    /// Run the whole registry over the default beta grid.
    #[arg(long)]
    pub full: bool,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, env = "ABETA_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Grid steps per axis for zalcman-surface.
    #[arg(long, default_value_t = 400)]
    pub grid_steps: usize,
    /// Radii for the growth check.
    #[arg(long, value_delimiter = ',')]
    pub radii: Option<Vec<f64>>,
    #[command(flatten)]
    pub params: TheoremParams,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Comma-separated, strictly increasing beta values in [0, 1).
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "linspace",
        required_unless_present = "linspace"
    )]
    pub grid: Option<Vec<f64>>,
    /// START STOP COUNT, endpoints included.
    #[arg(long, num_args = 3, value_names = ["START", "STOP", "COUNT"])]
    pub linspace: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Tabulate the Bohr-Rogosinski radius with tail `N` instead of the Bohr radius.
    #[arg(long, value_name = "N")]
    pub rogosinski: Option<usize>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FtildeArgs {
    #[arg(long)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub re: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub im: f64,
    #[arg(long, default_value_t = crate::extremal::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn dispatch(cmd: Command) -> CliResult<i32> {
    match cmd {
        Command::Bounds(a) => cmd_bounds(a),
        Command::Radii(a) => cmd_radii(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Curve(a) => cmd_curve(a),
        Command::Ftilde(a) => cmd_ftilde(a),
    }
}

fn open_output(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Rounds to 12 significant digits; non-finite values become `null`.
pub fn sig12(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(rounded)
}

/// Writes records as NDJSON, or as CSV with the first record's keys as header.
struct Emitter {
    out: Box<dyn Write>,
    format: Format,
    header_done: bool,
}

impl Emitter {
    fn new(out: &OutputArgs) -> CliResult<Self> {
        Ok(Self {
            out: open_output(&out.output)?,
            format: out.format,
            header_done: false,
        })
    }

    fn emit(&mut self, record: Map<String, Value>) -> CliResult<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{}", Value::Object(record))?,
            Format::Csv => {
                if !self.header_done {
                    let keys: Vec<&str> = record.keys().map(String::as_str).collect();
                    writeln!(self.out, "{}", keys.join(","))?;
                    self.header_done = true;
                }
                let cells: Vec<String> = record.values().map(csv_cell).collect();
                writeln!(self.out, "{}", cells.join(","))?;
            }
        }
        Ok(())
    }

    fn finish(mut self) -> CliResult<()> {
        self.out.flush()?;
        Ok(())
    }
}

fn csv_cell(v: &Value) -> String {
    let raw = match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw
    }
}

fn object(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(m) => m,
        _ => unreachable!("records are built with json!({{...}})"),
    }
}

fn beta_param(beta: f64) -> CliResult<BetaParam> {
    Ok(BetaParam::new(beta)?)
}

/// Builds a theorem instance from its id and the shared parameter flags.
pub fn parse_theorem(id: &str, p: &TheoremParams) -> std::result::Result<Theorem, String> {
    let need_r = || p.r.ok_or_else(|| format!("--r is required for {id}"));
    Ok(match id {
        "coeff" => Theorem::Coeff { n: p.n },
        "hankel-mu" => Theorem::HankelMu { n: p.n, mu: p.mu },
        "h2" => Theorem::H2 { n: p.n },
        "zalcman" => Theorem::Zalcman23,
        "toeplitz2" => Theorem::Toeplitz2 { n: p.n },
        "toeplitz3" => Theorem::Toeplitz3,
        "t31-upper" => Theorem::T31Upper,
        "t31-lower" => Theorem::T31Lower,
        "coeff-diff" => Theorem::CoeffDiff {
            n: p.n,
            power: p.power,
            p: p.p.ok_or("--p is required for coeff-diff")?,
        },
        "growth-lower" => Theorem::GrowthLower { r: need_r()? },
        "growth-upper" => Theorem::GrowthUpper { r: need_r()? },
        "re-fz-lower" => Theorem::ReFzLower { r: need_r()? },
        "re-fz-upper" => Theorem::ReFzUpper { r: need_r()? },
        other => return Err(format!("unknown theorem id '{other}'")),
    })
}

fn theorem_params(t: &Theorem) -> Value {
    match *t {
        Theorem::Coeff { n } | Theorem::H2 { n } | Theorem::Toeplitz2 { n } => json!({ "n": n }),
        Theorem::HankelMu { n, mu } => json!({ "n": n, "mu": sig12(mu) }),
        Theorem::CoeffDiff { n, power, p } => json!({ "n": n, "N": power, "p": sig12(p) }),
        Theorem::GrowthLower { r }
        | Theorem::GrowthUpper { r }
        | Theorem::ReFzLower { r }
        | Theorem::ReFzUpper { r } => json!({ "r": sig12(r) }),
        _ => json!({}),
    }
}

fn params_text(t: &Theorem) -> String {
    match theorem_params(t) {
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";"),
        _ => String::new(),
    }
}

fn cmd_bounds(a: BoundsArgs) -> CliResult<i32> {
    let theorem = parse_theorem(&a.theorem, &a.params).map_err(CliError::Usage)?;
    let beta = beta_param(a.beta)?;
    let value = verify::certify(theorem, beta)?;
    let params = match a.out.format {
        Format::Json => theorem_params(&theorem),
        Format::Csv => json!(params_text(&theorem)),
    };
    let mut out = Emitter::new(&a.out)?;
    out.emit(object(json!({
        "theorem_id": theorem.id(),
        "beta": sig12(beta.get()),
        "params": params,
        "value": sig12(value.value),
        "sharp": value.sharp.as_str(),
    })))?;
    out.finish()?;
    Ok(EXIT_OK)
}

fn radius_record(beta: f64, r: &RadiusResult) -> Map<String, Value> {
    let (m, tail) = match r.equation {
        radii::RadiusEquation::Bohr { m } => (m, Value::Null),
        radii::RadiusEquation::Rogosinski { m, tail } => (m, json!(tail)),
    };
    object(json!({
        "equation_id": r.equation.label(),
        "beta": sig12(beta),
        "m": m,
        "N": tail,
        "radius": sig12(r.radius),
        "residual": sig12(r.residual),
        "bracket_lo": sig12(r.bracket.0),
        "bracket_hi": sig12(r.bracket.1),
        "iterations": r.iterations,
    }))
}

fn cmd_radii(a: RadiiArgs) -> CliResult<i32> {
    let mut out = Emitter::new(&a.out)?;
    if a.table1 {
        let mut failed = false;
        for (b, published) in TABLE1 {
            let r = radii::bohr_radius(beta_param(b)?, 1)?;
            let delta = r.radius - published;
            let ok = delta.abs() <= TABLE1_TOL;
            if !ok {
                failed = true;
                eprintln!(
                    "DISCREPANCY beta={b}: computed {:.7} published {published} delta {delta:.3e}",
                    r.radius
                );
            }
            out.emit(object(json!({
                "beta": sig12(b),
                "computed": sig12(r.radius),
                "published": sig12(published),
                "delta": sig12(delta),
                "ok": ok,
            })))?;
        }
        out.finish()?;
        return Ok(if failed { EXIT_FAILED } else { EXIT_OK });
    }
    let beta_value = a.beta.ok_or_else(|| CliError::Usage("--beta is required".into()))?;
    let beta = beta_param(beta_value)?;
    let r = match a.rogosinski {
        Some(tail) => radii::rogosinski_radius(beta, a.m, tail)?,
        None => radii::bohr_radius(beta, a.m)?,
    };
    out.emit(radius_record(beta_value, &r))?;
    out.finish()?;
    Ok(EXIT_OK)
}

fn report_record(r: &VerifyReport) -> Map<String, Value> {
    object(json!({
        "theorem_id": r.theorem.id(),
        "params": params_text(&r.theorem),
        "beta": sig12(r.beta),
        "samples": r.samples,
        "max_observed": sig12(r.max_observed),
        "bound": sig12(r.bound),
        "attainment_gap": sig12(r.attainment_gap),
        "witness": r.witness,
        "violations": r.violations,
        "sharp": r.sharp.as_str(),
        "note": r.note,
    }))
}

fn surface_record(beta: BetaParam, steps: usize) -> CliResult<(Map<String, Value>, bool)> {
    let m = verify::scan_zalcman_surface(beta, steps)?;
    let target = crate::bounds::zalcman_bound(beta);
    let ok = (m.value - target).abs() <= 1e-6 && m.p <= 1e-6 && m.rho <= 1e-6;
    Ok((
        object(json!({
            "theorem_id": "zalcman-surface",
            "beta": sig12(beta.get()),
            "max_value": sig12(m.value),
            "argmax_p": sig12(m.p),
            "argmax_rho": sig12(m.rho),
            "bound": sig12(target),
            "ok": ok,
        })),
        ok,
    ))
}

fn t31_record(beta: BetaParam) -> CliResult<(Map<String, Value>, bool)> {
    let r = verify::verify_t31_lower_surface(beta)?;
    let ok = r.passed();
    Ok((
        object(json!({
            "theorem_id": "t31-surface",
            "beta": sig12(r.beta),
            "grid_points": r.grid_points,
            "monotone_failures": r.monotone_failures,
            "argmin": sig12(r.argmin),
            "critical_point": sig12(r.critical_point),
            "min_value": sig12(r.min_value),
            "bound": sig12(r.bound),
            "ok": ok,
        })),
        ok,
    ))
}

fn growth_record(beta: BetaParam, samples: usize, seed: u64, radii: &[f64]) -> CliResult<(Map<String, Value>, bool)> {
    let r = verify::verify_growth(beta, samples, seed, radii)?;
    let ok = r.passed();
    let angles: Vec<Value> = r.ftilde_min_angles.iter().map(|&(_, t)| sig12(t)).collect();
    Ok((
        object(json!({
            "theorem_id": "growth",
            "beta": sig12(r.beta),
            "samples": r.samples,
            "radii": r.radii.iter().map(|&x| sig12(x)).collect::<Vec<_>>(),
            "angles": r.angles,
            "violations": r.violations,
            "worst_margin": sig12(r.worst_margin),
            "ftilde_min_angles": angles,
            "min_at_pi": r.min_at_pi,
        })),
        ok,
    ))
}

fn cmd_verify(a: VerifyArgs) -> CliResult<i32> {
    if a.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let radii_grid = a.radii.clone().unwrap_or_else(|| verify::DEFAULT_GROWTH_RADII.to_vec());
    let mut out = Emitter::new(&a.out)?;
    let mut all_ok = true;

    if a.full {
        for b in verify::DEFAULT_BETA_GRID {
            let beta = beta_param(b)?;
            for theorem in verify::registry() {
                let r = verify::verify_bound(theorem, beta, a.samples, a.seed)?;
                all_ok &= r.passed();
                out.emit(report_record(&r))?;
            }
            let (rec, ok) = surface_record(beta, a.grid_steps)?;
            all_ok &= ok;
            out.emit(rec)?;
            let (rec, ok) = t31_record(beta)?;
            all_ok &= ok;
            out.emit(rec)?;
            let growth_samples = a.samples.min(1000);
            let (rec, ok) = growth_record(beta, growth_samples, a.seed, &radii_grid)?;
            all_ok &= ok;
            out.emit(rec)?;
        }
    } else {
        let id = a.theorem.as_deref().expect("clap requires --theorem without --full");
        let beta = beta_param(a.beta.expect("clap requires --beta without --full"))?;
        let (rec, ok) = match id {
            "zalcman-surface" => surface_record(beta, a.grid_steps)?,
            "t31-surface" => t31_record(beta)?,
            "growth" => growth_record(beta, a.samples, a.seed, &radii_grid)?,
            _ => {
                let theorem = parse_theorem(id, &a.params).map_err(CliError::Usage)?;
                let r = verify::verify_bound(theorem, beta, a.samples, a.seed)?;
                (report_record(&r), r.passed())
            }
        };
        all_ok &= ok;
        out.emit(rec)?;
    }
    out.finish()?;
    Ok(if all_ok { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_curve(a: CurveArgs) -> CliResult<i32> {
    let grid = match (&a.grid, &a.linspace) {
        (Some(g), _) => g.clone(),
        (None, Some(l)) => {
            let (start, stop, count) = (l[0], l[1], l[2]);
            if !(count >= 1.0 && count.fract() == 0.0) {
                return Err(CliError::Usage(format!(
                    "linspace COUNT must be a positive integer, got {count}"
                )));
            }
            let count = count as usize;
            if count == 1 {
                vec![start]
            } else {
                (0..count)
                    .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
                    .collect()
            }
        }
        (None, None) => return Err(CliError::Usage("a beta grid is required".into())),
    };
    if grid.is_empty() {
        return Err(CliError::Usage("the beta grid is empty".into()));
    }
    let kind = match a.rogosinski {
        Some(tail) => CurveKind::Rogosinski { tail },
        None => CurveKind::Bohr,
    };
    let rows = radii::radius_curve(a.m, kind, &grid)?;
    let mut out = open_output(&a.output)?;
    writeln!(out, "beta,radius")?;
    for (b, r) in rows {
        writeln!(out, "{b:.6},{:.6}", r.radius)?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_ftilde(a: FtildeArgs) -> CliResult<i32> {
    let beta = beta_param(a.beta)?;
    let v = ftilde_eval(beta, Complex64::new(a.re, a.im), a.tol)?;
    let method = match v.method {
        crate::extremal::EvalMethod::Series => "series",
        crate::extremal::EvalMethod::Quadrature => "quadrature",
        crate::extremal::EvalMethod::ClosedForm => "closed-form",
    };
    let mut out = Emitter::new(&a.out)?;
    out.emit(object(json!({
        "beta": sig12(a.beta),
        "z_re": sig12(a.re),
        "z_im": sig12(a.im),
        "re": sig12(v.value.re),
        "im": sig12(v.value.im),
        "abs_error_bound": sig12(v.abs_error_bound),
        "method": method,
    })))?;
    out.finish()?;
    Ok(EXIT_OK)
}

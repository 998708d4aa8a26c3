//! Library behind the `trivol` binary. Every command returns its output and
//! exit code instead of printing, so tests can drive it directly and inject
//! a different closed-form function.

pub mod args;
pub mod envelope;
pub mod selftest;
pub mod sweep;

use std::fmt;
use std::path::Path;

use serde_json::{json, Map, Value};
use trivol_core::formula::{self, classify, CaseId};
use trivol_core::oracle::{self, quadrature};
use trivol_core::scalar::{self, parse_scalar, to_f64, Scalar};
use trivol_core::{BoxDomain3, CanonicalDomain};

use args::{Cli, Command, DomainArgs, VerifyArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Relative tolerance of `verify` in float mode.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Evaluates the formula of a case on a canonical domain.
pub type ClosedForm = fn(CaseId, &CanonicalDomain) -> Scalar;

/// Bad user input; always exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<trivol_core::Error> for InputError {
    fn from(e: trivol_core::Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Rational,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Rational => "rational",
            Mode::Float => "float",
        }
    }
}

/// `--float` wins; otherwise `TRIVOL_MODE` (`rational` or `float`),
/// defaulting to rational.
pub fn resolve_mode(float_flag: bool, env: Option<&str>) -> Result<Mode, InputError> {
    let from_env = match env {
        None | Some("") | Some("rational") => Mode::Rational,
        Some("float") => Mode::Float,
        Some(other) => {
            return Err(InputError(format!(
                "TRIVOL_MODE must be \"rational\" or \"float\", got {other:?}"
            )))
        }
    };
    Ok(if float_flag { Mode::Float } else { from_env })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn input_error(e: InputError) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
        }
    }
}

fn split_pair<'a>(s: &'a str, what: &str) -> Result<(&'a str, &'a str), InputError> {
    match s.split(',').collect::<Vec<_>>().as_slice() {
        [a, b] => Ok((a.trim(), b.trim())),
        _ => Err(InputError(format!(
            "expected {what} as two comma-separated numbers, got {s:?}"
        ))),
    }
}

fn three<T>(v: Vec<T>) -> [T; 3] {
    v.try_into()
        .unwrap_or_else(|_| unreachable!("clap enforces three values"))
}

pub fn parse_domain(args: &DomainArgs) -> Result<BoxDomain3, InputError> {
    if let Some(bounds) = &args.bounds {
        let pairs = bounds
            .iter()
            .map(|s| {
                let (lo, hi) = split_pair(s, "lo,hi")?;
                Ok((parse_scalar(lo)?, parse_scalar(hi)?))
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        return Ok(BoxDomain3::from_bounds(three(pairs))?);
    }
    if let Some(cl) = &args.cl {
        let pairs = cl
            .iter()
            .map(|s| {
                let (c, l) = split_pair(s, "c,l")?;
                Ok((parse_scalar(c)?, parse_scalar(l)?))
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        return Ok(BoxDomain3::from_centers(three(pairs))?);
    }
    if let Some(path) = &args.domain {
        let text = read_file(path)?;
        return Ok(BoxDomain3::from_json_str(&text)?);
    }
    Err(InputError(
        "one of --bounds, --cl or --domain is required".into(),
    ))
}

pub(crate) fn read_file(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

pub fn cmd_volume(domain: &BoxDomain3, compact: bool) -> Output {
    let report = formula::hull_volume_any(domain);
    let env = envelope::base("volume", &report);
    Output::ok(envelope::render(&Value::Object(env), compact))
}

pub fn cmd_breakdown(domain: &BoxDomain3, compact: bool) -> Output {
    let report = formula::hull_volume_any(domain);
    let mut env = envelope::base("breakdown", &report);
    env.insert("breakdown".into(), envelope::breakdown(&report));
    Output::ok(envelope::render(&Value::Object(env), compact))
}

struct QuadratureCheck {
    fields: Map<String, Value>,
    passed: bool,
}

fn quadrature_check(domain: &BoxDomain3, closed: &Scalar, mode: Mode) -> QuadratureCheck {
    let mut fields = Map::new();
    let passed = match mode {
        Mode::Rational => {
            let q = quadrature::oracle_volume_quadrature(domain);
            let abs = scalar::abs(&(closed - &q));
            let rel = if q == scalar::zero() {
                abs.clone()
            } else {
                &abs / scalar::abs(&q)
            };
            envelope::put_exact(&mut fields, "quadrature", &q);
            envelope::put_exact(&mut fields, "abs_diff", &abs);
            envelope::put_exact(&mut fields, "rel_diff", &rel);
            fields.insert("tolerance".into(), json!("exact"));
            abs == scalar::zero()
        }
        Mode::Float => {
            let q = quadrature::oracle_volume_quadrature_f64(domain);
            let c = to_f64(closed);
            let abs = (c - q).abs();
            let rel = if q == 0.0 { abs } else { abs / q.abs() };
            fields.insert("quadrature_f64".into(), envelope::float(q));
            fields.insert("abs_diff_f64".into(), envelope::float(abs));
            fields.insert("rel_diff_f64".into(), envelope::float(rel));
            fields.insert("tolerance".into(), envelope::float(FLOAT_TOLERANCE));
            rel <= FLOAT_TOLERANCE
        }
    };
    QuadratureCheck { fields, passed }
}

/// `verify` with the closed form supplied by the caller.
pub fn cmd_verify_with(
    domain: &BoxDomain3,
    args: &VerifyArgs,
    mode: Mode,
    compact: bool,
    closed_form: ClosedForm,
) -> Output {
    let report = formula::hull_volume_any(domain);
    let closed = closed_form(classify(&report.canonical), &report.canonical);
    let mut env = envelope::base("verify", &report);
    envelope::put_exact(&mut env, "volume", &closed);

    let check = quadrature_check(domain, &closed, mode);
    let mut v = check.fields;
    v.insert("mode".into(), json!(mode.as_str()));
    envelope::put_exact(&mut v, "closed_form", &closed);
    v.insert("passed".into(), json!(check.passed));
    if args.mc_samples > 0 {
        let mc = oracle::oracle_volume_montecarlo(domain, args.mc_samples, args.seed);
        let c = to_f64(&closed);
        v.insert(
            "monte_carlo".into(),
            json!({
                "estimate": envelope::float(mc.estimate),
                "std_error": envelope::float(mc.std_error),
                "samples": mc.samples,
                "hits": mc.hits,
                "seed": mc.seed,
                "bounding_volume": envelope::float(mc.bounding_volume),
                "within_4_std_errors": (mc.estimate - c).abs() <= 4.0 * mc.std_error,
            }),
        );
    }
    env.insert("verify".into(), Value::Object(v));
    Output {
        stdout: envelope::render(&Value::Object(env), compact),
        stderr: if check.passed {
            String::new()
        } else {
            "verify: closed form disagrees with the quadrature oracle\n".into()
        },
        code: if check.passed {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    }
}

pub fn cmd_verify(domain: &BoxDomain3, args: &VerifyArgs, mode: Mode, compact: bool) -> Output {
    cmd_verify_with(domain, args, mode, compact, formula::case_formula)
}

/// Runs a parsed command line with `TRIVOL_MODE` passed in explicitly.
/// Output is not yet written to `--out`; see [`deliver`].
pub fn run_with(cli: &Cli, mode_env: Option<&str>, closed_form: ClosedForm) -> Output {
    let compact = cli.json;
    let result: Result<Output, InputError> = (|| match &cli.command {
        Command::Volume(d) => {
            resolve_mode(false, mode_env)?;
            Ok(cmd_volume(&parse_domain(d)?, compact))
        }
        Command::Breakdown(d) => {
            resolve_mode(false, mode_env)?;
            Ok(cmd_breakdown(&parse_domain(d)?, compact))
        }
        Command::Verify(v) => {
            let mode = resolve_mode(v.float, mode_env)?;
            let domain = parse_domain(&v.domain)?;
            Ok(cmd_verify_with(&domain, v, mode, compact, closed_form))
        }
        Command::Sweep(s) => Ok(Output::ok(sweep::run(s)?)),
        Command::Selftest => Ok(selftest::run(closed_form, compact)),
    })();
    result.unwrap_or_else(Output::input_error)
}

pub fn run(cli: &Cli, mode_env: Option<&str>) -> Output {
    run_with(cli, mode_env, formula::case_formula)
}

/// Moves standard output into the `--out` file when one was given. An
/// unwritable path turns the result into an input error.
pub fn deliver(cli: &Cli, mut out: Output) -> Output {
    if let Some(path) = &cli.out {
        if out.code == EXIT_INPUT {
            return out;
        }
        if let Err(e) = std::fs::write(path, &out.stdout) {
            return Output::input_error(InputError(format!(
                "cannot write {}: {e}",
                path.display()
            )));
        }
        out.stdout.clear();
    }
    out
}

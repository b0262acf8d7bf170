//! Command-line front end.
//!
//! [`execute`] parses an argument vector, runs the requested computation and
//! returns the exit status together with everything that would be written to
//! standard output and standard error. The `kolchin` binary is a thin wrapper
//! around it.
//!
//! Exit status: 0 success, 1 malformed input, 2 internal cross-check failure,
//! 3 resource guard.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::diffdim::{
    classify_minimal_candidate, ex2_exponents, single_equation_poly,
    standard_coefficient_report_with, system_count, system_stabilization_bound, triangular_family,
    triangular_family_from_equations, DifferentialSystem,
};
use crate::error::{Error, Result};
use crate::lattice::{Budget, ExponentSet, Method, DEFAULT_BUDGET};
use crate::macaulay::{
    is_kolchin, macaulay_constants, macaulay_nondecreasing, minimizing_coefficients, reconstruct,
    sit_compare, MacaulayConstants,
};
use crate::numpoly::NumPoly;

/// Environment variable overriding the default oracle budget.
pub const BUDGET_ENV: &str = "KOLCHIN_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "kolchin",
    version,
    about = "Kolchin dimension polynomials and Macaulay constants"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Maximum number of lattice points the counting oracle may enumerate.
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Interp,
    Rec,
    Ie,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Interp => vec![Method::Interpolation],
            MethodArg::Rec => vec![Method::Recursion],
            MethodArg::Ie => vec![Method::InclusionExclusion],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Inline exponent sets, e.g. "m=2; rows=(1,2),(2,1)"; repeat `rows=` for systems.
    #[arg(long)]
    inline: Option<String>,

    /// JSON file {"m": int, "sets": [[[int, ...], ...], ...]}.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension polynomial of an exponent set or system.
    Dimpoly {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Interp)]
        method: MethodArg,
    },
    /// Minimizing coefficients of a polynomial literal a_d,...,a_0.
    Minimize {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Macaulay constants of a polynomial literal.
    Macaulay {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Polynomial from Macaulay constants c_{d+1},...,c_1.
    Reconstruct {
        #[arg(long, allow_hyphen_values = true)]
        constants: String,
    },
    /// Whether a polynomial is a Kolchin dimension polynomial.
    IsKolchin {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Order two polynomials by their minimizing coefficients.
    Compare {
        #[arg(long, num_args = 1, required = true, allow_hyphen_values = true)]
        poly: Vec<String>,
    },
    /// Brute-force point counts next to polynomial values.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        s_max: i64,
    },
    /// Built-in example families.
    Example {
        #[command(subcommand)]
        which: ExampleKind,
    },
    /// Triangular-family report with the published values alongside.
    Report {
        #[arg(long, default_value_t = 6)]
        m_max: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ExampleKind {
    /// {(1,2),(k,1)} in two derivations.
    Ex2 {
        #[arg(long)]
        k: i64,
    },
    /// 2 on the diagonal, 1 below.
    Triangular {
        #[arg(long)]
        m: usize,
        /// Use the rows read from the listed equations instead of the matrix.
        #[arg(long)]
        equations: bool,
    },
    /// A single equation of order d in m derivations.
    Single {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: u64,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(err: &Error) -> Self {
        Outcome {
            code: err.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match run(&cli) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::failed(&e),
    }
}

fn run(cli: &Cli) -> Result<String> {
    let budget = Budget(cli.budget);
    let fmt = cli.format;
    match &cli.command {
        Command::Dimpoly { input, method } => dimpoly(&load_system(input)?, *method, budget, fmt),
        Command::Minimize { poly } | Command::Macaulay { poly } | Command::IsKolchin { poly } => {
            let p = parse_poly(poly)?;
            Ok(render_analysis(&p, fmt, Value::Null))
        }
        Command::Reconstruct { constants } => {
            let c = MacaulayConstants::new(parse_ints(constants)?);
            Ok(render_analysis(&reconstruct(&c), fmt, Value::Null))
        }
        Command::Compare { poly } => compare(poly, fmt),
        Command::Oracle { input, s_max } => oracle(&load_system(input)?, *s_max, budget, fmt),
        Command::Example { which } => example(which, budget, fmt),
        Command::Report { m_max } => {
            let report = standard_coefficient_report_with(*m_max, budget)?;
            Ok(match fmt {
                Format::Text => report.to_string(),
                Format::Json => {
                    let rows: Vec<Value> = report
                        .rows
                        .iter()
                        .map(|r| {
                            let mut v = analysis_json(&r.poly);
                            v["m"] = json!(r.m);
                            v["identity"] = match &r.identity {
                                Some((l, rr)) => {
                                    json!({"lhs": int(l), "rhs": int(rr), "holds": l == rr})
                                }
                                None => Value::Null,
                            };
                            v
                        })
                        .collect();
                    let claims: Vec<Value> = report
                        .claims
                        .iter()
                        .map(|c| json!({"m": c.m, "quantity": c.quantity, "published": c.claimed, "computed": c.computed, "agrees": c.matches()}))
                        .collect();
                    let variant: Vec<Value> = report
                        .equation_variant
                        .iter()
                        .map(|(m, p)| json!({"m": m, "standard": ints(&p.standard())}))
                        .collect();
                    to_json_line(
                        &json!({"rows": rows, "claims": claims, "equation_variant": variant}),
                    )
                }
            })
        }
    }
}

fn dimpoly(
    sys: &DifferentialSystem,
    method: MethodArg,
    budget: Budget,
    fmt: Format,
) -> Result<String> {
    let methods = method.methods();
    let mut results: Vec<(Method, NumPoly)> = Vec::new();
    for &m in &methods {
        let p = sys
            .sets()
            .iter()
            .map(|e| m.run(e, budget))
            .sum::<Result<NumPoly>>()?;
        results.push((m, p));
    }
    let (_, reference) = &results[0];
    if let Some((m, p)) = results.iter().find(|(_, p)| p != reference) {
        return Err(Error::Disagreement(format!(
            "{} gives {} but {} gives {}",
            results[0].0.name(),
            reference.to_literal(),
            m.name(),
            p.to_literal()
        )));
    }
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    let agreement = if methods.len() > 1 {
        json!(true)
    } else {
        Value::Null
    };
    match fmt {
        Format::Json => {
            let mut v = analysis_json(reference);
            v["m"] = json!(sys.dim());
            v["methods"] = json!(names);
            v["method_agreement"] = agreement;
            Ok(to_json_line(&v))
        }
        Format::Text => {
            let mut out = String::new();
            for (j, e) in sys.sets().iter().enumerate() {
                writeln!(out, "set {}: {}", j + 1, e).unwrap();
            }
            out.push_str(&analysis_text(reference));
            if methods.len() > 1 {
                writeln!(out, "methods: {} agree", names.join(", ")).unwrap();
            }
            Ok(out)
        }
    }
}

fn compare(literals: &[String], fmt: Format) -> Result<String> {
    if literals.len() != 2 {
        return Err(Error::InvalidInput(format!(
            "compare needs exactly two --poly values, got {}",
            literals.len()
        )));
    }
    let p = parse_poly(&literals[0])?;
    let q = parse_poly(&literals[1])?;
    let ord = sit_compare(&p, &q);
    let word = match ord {
        std::cmp::Ordering::Less => "less",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "greater",
    };
    let bp = minimizing_coefficients(&p);
    let bq = minimizing_coefficients(&q);
    Ok(match fmt {
        Format::Json => to_json_line(&json!({
            "order": word,
            "left": {"standard": ints(&p.standard()), "minimizing": ints(bp.as_slice()), "kolchin": is_kolchin(&p)},
            "right": {"standard": ints(&q.standard()), "minimizing": ints(bq.as_slice()), "kolchin": is_kolchin(&q)},
        })),
        Format::Text => format!(
            "{} {} {}\nminimizing {} vs {}\n",
            p,
            match ord {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            },
            q,
            tuple(bp.as_slice()),
            tuple(bq.as_slice())
        ),
    })
}

fn oracle(sys: &DifferentialSystem, s_max: i64, budget: Budget, fmt: Format) -> Result<String> {
    let p = sys
        .sets()
        .iter()
        .map(|e| Method::Interpolation.run(e, budget))
        .sum::<Result<NumPoly>>()?;
    let bound = system_stabilization_bound(sys);
    let mut rows = Vec::new();
    for s in 0..=s_max {
        let count = system_count(sys, s, budget)?;
        let value = p.eval(s);
        rows.push((s, count, value));
    }
    // counts never disagree with the polynomial from the bound on
    if let Some((s, count, value)) = rows
        .iter()
        .find(|(s, c, v)| *s >= bound as i64 && BigInt::from(*c) != *v)
    {
        return Err(Error::VerificationMismatch(format!(
            "count {count} differs from polynomial value {value} at s={s} beyond bound {bound}"
        )));
    }
    Ok(match fmt {
        Format::Json => {
            let table: Vec<Value> = rows
                .iter()
                .map(|(s, c, v)| json!({"s": s, "count": c, "poly": int(v), "agree": BigInt::from(*c) == *v}))
                .collect();
            to_json_line(&json!({
                "standard": ints(&p.standard()),
                "stabilization_bound": bound,
                "table": table,
            }))
        }
        Format::Text => {
            let mut out = format!("polynomial: {p}\nstabilization bound: {bound}\n");
            writeln!(out, "{:>4} {:>12} {:>12}  agree", "s", "count", "poly").unwrap();
            for (s, c, v) in &rows {
                let agree = if BigInt::from(*c) == *v { "yes" } else { "no" };
                writeln!(out, "{s:>4} {c:>12} {v:>12}  {agree}").unwrap();
            }
            out
        }
    })
}

fn example(which: &ExampleKind, budget: Budget, fmt: Format) -> Result<String> {
    let (set, m) = match which {
        ExampleKind::Ex2 { k } => {
            let k = u32::try_from(*k)
                .map_err(|_| Error::InvalidInput(format!("k must be at least 2, got {k}")))?;
            (ex2_exponents(k)?, 2)
        }
        ExampleKind::Triangular { m, equations } => {
            let set = if *equations {
                triangular_family_from_equations(*m)?
            } else {
                triangular_family(*m)?
            };
            (set, *m)
        }
        ExampleKind::Single { m, d } => {
            if *m == 0 {
                return Err(Error::InvalidInput("m must be at least 1".into()));
            }
            let p = single_equation_poly(*m, *d);
            let cand = classify_minimal_candidate(&p, *m);
            return Ok(match fmt {
                Format::Json => {
                    let mut v = analysis_json(&p);
                    v["m"] = json!(m);
                    v["constant_macaulay"] = json!(cand.constant_macaulay);
                    v["degree_matches"] = json!(cand.degree_matches);
                    v["order"] = cand.order.as_ref().map(int).unwrap_or(Value::Null);
                    to_json_line(&v)
                }
                Format::Text => {
                    let mut out = analysis_text(&p);
                    writeln!(
                        out,
                        "constant macaulay: {}\ndegree m-1: {}\norder: {}",
                        cand.constant_macaulay,
                        cand.degree_matches,
                        cand.order
                            .map(|o| o.to_string())
                            .unwrap_or_else(|| "-".into())
                    )
                    .unwrap();
                    out
                }
            });
        }
    };
    let sys = DifferentialSystem::single(set);
    debug_assert_eq!(sys.dim(), m);
    dimpoly(&sys, MethodArg::All, budget, fmt)
}

fn analysis_json(p: &NumPoly) -> Value {
    let b = minimizing_coefficients(p);
    let c = macaulay_constants(&b);
    json!({
        "degree": p.degree(),
        "standard": ints(&p.standard()),
        "literal": p.to_literal(),
        "rendered": p.to_string(),
        "minimizing": ints(b.as_slice()),
        "macaulay": {
            "original": {"indices": "c_{d+1}..c_1", "values": ints(c.as_slice())},
            "renumbered": {"indices": "c_d..c_0", "values": ints(c.as_slice())},
            "literal": tuple_plain(c.as_slice()),
        },
        "kolchin": is_kolchin(p),
        "macaulay_nondecreasing": macaulay_nondecreasing(p),
    })
}

fn analysis_text(p: &NumPoly) -> String {
    let b = minimizing_coefficients(p);
    let c = macaulay_constants(&b);
    format!(
        "polynomial: {}\ndegree: {}\nstandard (a_d..a_0): {}\nminimizing (b_d..b_0): {}\nmacaulay (c_{{d+1}}..c_1): {}\nmacaulay renumbered (c_d..c_0): {}\nkolchin: {}\n",
        p,
        p.degree(),
        tuple(&p.standard()),
        tuple(b.as_slice()),
        tuple(c.as_slice()),
        tuple(c.as_slice()),
        is_kolchin(p)
    )
}

fn render_analysis(p: &NumPoly, fmt: Format, extra: Value) -> String {
    match fmt {
        Format::Json => {
            let mut v = analysis_json(p);
            if let Value::Object(map) = extra {
                for (k, val) in map {
                    v[k] = val;
                }
            }
            to_json_line(&v)
        }
        Format::Text => analysis_text(p),
    }
}

fn to_json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn tuple(v: &[BigInt]) -> String {
    format!("({})", tuple_plain(v))
}

fn tuple_plain(v: &[BigInt]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_ints(literal: &str) -> Result<Vec<BigInt>> {
    let trimmed = literal.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Err(Error::InvalidInput("empty coefficient list".into()));
    }
    trimmed
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("not an integer: {:?}", t.trim())))
        })
        .collect()
}

/// Standard coefficients `a_d,…,a_0`, highest index first.
pub fn parse_poly(literal: &str) -> Result<NumPoly> {
    Ok(NumPoly::from_standard(parse_ints(literal)?))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    m: i64,
    sets: Vec<Vec<Vec<i64>>>,
}

fn exponent(v: i64) -> Result<u32> {
    if v < 0 {
        return Err(Error::InvalidInput(format!("negative exponent {v}")));
    }
    u32::try_from(v).map_err(|_| Error::InvalidInput(format!("exponent {v} is too large")))
}

fn build_system(m: i64, sets: Vec<Vec<Vec<i64>>>) -> Result<DifferentialSystem> {
    let m =
        usize::try_from(m).map_err(|_| Error::InvalidInput(format!("invalid dimension m={m}")))?;
    let sets = sets
        .into_iter()
        .map(|rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(exponent).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            ExponentSet::new(m, rows)
        })
        .collect::<Result<Vec<_>>>()?;
    DifferentialSystem::new(m, sets)
}

/// Parses the JSON system format.
pub fn parse_system_json(text: &str) -> Result<DifferentialSystem> {
    let file: SystemFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    build_system(file.m, file.sets)
}

/// Parses `m=2; rows=(1,2),(2,1); rows=(1,1)`. An empty `rows=` is the empty
/// set; without any `rows=` clause the system is one empty set.
pub fn parse_inline(text: &str) -> Result<DifferentialSystem> {
    let mut m = None;
    let mut sets = Vec::new();
    for clause in text.split(';').map(str::trim).filter(|c| !c.is_empty()) {
        let (key, value) = clause
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("expected key=value, got {clause:?}")))?;
        match key.trim() {
            "m" => {
                let v = value.trim();
                m = Some(
                    v.parse::<i64>()
                        .map_err(|_| Error::InvalidInput(format!("bad dimension {v:?}")))?,
                );
            }
            "rows" => sets.push(parse_rows(value)?),
            other => return Err(Error::InvalidInput(format!("unknown key {other:?}"))),
        }
    }
    let m = m.ok_or_else(|| Error::InvalidInput("missing m=".into()))?;
    if sets.is_empty() {
        sets.push(Vec::new());
    }
    build_system(m, sets)
}

fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidInput(format!("expected '(' in rows, got {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::InvalidInput("unclosed '(' in rows".into()))?;
        let inner = body[..close].trim();
        let row = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidInput(format!("not an integer: {:?}", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?
        };
        rows.push(row);
        rest = body[close + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Ok(rows)
}

fn load_system(input: &InputArgs) -> Result<DifferentialSystem> {
    match (&input.inline, &input.file) {
        (Some(text), None) => parse_inline(text),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            parse_system_json(&text)
        }
        _ => Err(Error::InvalidInput(
            "give exactly one of --inline or --file".into(),
        )),
    }
}

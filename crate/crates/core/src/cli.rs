//! Command-line front end: `paramreg <check|witness|hull|radius|suffcond> FILE`.
//!
//! Exit codes: 0 regular or computed, 2 singular member found, 3 undecided,
//! 1 input or usage error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::det_exact;
use crate::hull::{solve_hull, HullStatus};
use crate::model::{BoxPolicy, NormalizedMatrix, ParametricMatrix};
use crate::oracle::{det_poly_bruteforce, grid_scan_singular, sample_hull_inner, BRUTEFORCE_MAX_DIM};
use crate::problem::ProblemFile;
use crate::radius::{regularity_radius, RadiusKind};
use crate::regularity::{
    check_regularity, check_regularity_reduced_sufficient, sufficient_condition_rho, CheckOptions,
    RegularityVerdict, Status, Witness,
};
use crate::report;
use crate::scalar::{int, parse_scalar, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "paramreg", version, about = "Exact regularity checks for interval parametric matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Width of reported root brackets and enclosures.
    #[arg(long, global = true, default_value = "1e-9")]
    pub tol: String,

    /// Significant digits in text reports.
    #[arg(long, global = true, default_value_t = 6)]
    pub digits: usize,

    /// Subset size for the reduced sufficient test.
    #[arg(long, global = true)]
    pub reduce: Option<usize>,

    /// Examine every slice instead of stopping at the first singular one.
    #[arg(long, global = true)]
    pub exhaustive: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub parallel: Option<usize>,

    /// Visit slices with the largest spectral weight first.
    #[arg(long, global = true)]
    pub heuristic_order: bool,

    /// Cross-check the result against brute-force oracles.
    #[arg(long, global = true)]
    pub selfcheck: bool,

    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide regularity, or evaluate one member with --at.
    Check {
        file: PathBuf,
        /// Comma-separated parameter vector, e.g. "1,-13/15,-1".
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Accept --at points outside the box with a warning.
        #[arg(long)]
        lax: bool,
    },
    /// List the singular points of every edge slice.
    Witness { file: PathBuf },
    /// Interval hull of the solution set (the file must contain b0).
    Hull { file: PathBuf },
    /// Regularity radius.
    Radius { file: PathBuf },
    /// Spectral-radius sufficient test, global and reduced.
    Suffcond { file: PathBuf },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Serialize)]
struct SelfCheck {
    name: &'static str,
    ok: bool,
    detail: String,
}

impl SelfCheck {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            ok,
            detail: detail.into(),
        }
    }
}

struct Rendered {
    code: i32,
    command: &'static str,
    status: String,
    text: String,
    result: Value,
    checks: Vec<SelfCheck>,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn usage(path: &str, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        msg: msg.into(),
    }
}

fn parse_tol(text: &str) -> Result<Rational> {
    match parse_scalar(text) {
        Some(t) if t.is_positive() => Ok(t),
        _ => Err(usage("--tol", format!("expected a positive number, got {text:?}"))),
    }
}

fn parse_point(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .enumerate()
        .map(|(i, s)| parse_scalar(s).ok_or_else(|| usage(&format!("--at[{i}]"), format!("unparseable scalar {s:?}"))))
        .collect()
}

/// Resolution whose grid has at most about 2·10⁴ points, capped at 17 per axis.
fn grid_resolution(param_count: usize) -> usize {
    let mut r = 17usize;
    while r > 2 && r.pow(param_count as u32) > 20_000 {
        r -= 1;
    }
    r
}

fn witness_holds(pm: &ParametricMatrix, w: &Witness) -> bool {
    let lo: Vec<Rational> = w.point.iter().map(|iv| iv.lo().clone()).collect();
    let d_lo = det_exact(&pm.evaluate_unchecked(&lo));
    if w.is_exact() {
        return d_lo.is_zero();
    }
    let hi: Vec<Rational> = w.point.iter().map(|iv| iv.hi().clone()).collect();
    let d_hi = det_exact(&pm.evaluate_unchecked(&hi));
    !(d_lo * d_hi).is_positive()
}

fn verdict_checks(pm: &ParametricMatrix, nm: &NormalizedMatrix, v: &RegularityVerdict) -> Vec<SelfCheck> {
    let mut out = Vec::new();
    if nm.dim() <= BRUTEFORCE_MAX_DIM {
        let bad: Vec<String> = v
            .slices
            .iter()
            .filter(|s| det_poly_bruteforce(nm, &s.key).map_or(true, |d| d != s.det))
            .map(|s| s.key.to_string())
            .collect();
        out.push(SelfCheck::new(
            "cofactor determinants",
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} slices agree", v.slices.len())
            } else {
                format!("mismatch on {}", bad.join("; "))
            },
        ));
    }
    let failing = v.witnesses.iter().filter(|w| !witness_holds(pm, w)).count();
    out.push(SelfCheck::new(
        "witness determinants",
        failing == 0,
        format!("{} of {} witnesses re-verified", v.witnesses.len() - failing, v.witnesses.len()),
    ));
    let resolution = grid_resolution(pm.param_count());
    let grid = grid_scan_singular(pm, resolution);
    let consistent = !(grid.is_some() && v.status == Status::Regular);
    let detail = match &grid {
        Some(g) => format!(
            "grid {resolution}: singular member near p = {}",
            report::vector_text(&g.point, 6)
        ),
        None => format!("grid {resolution}: no singular member found"),
    };
    out.push(SelfCheck::new("grid scan", consistent, detail));
    out
}

fn options(cli: &Cli, tol: &Rational, exhaustive: bool) -> CheckOptions {
    CheckOptions {
        tol: tol.clone(),
        exhaustive,
        heuristic_order: cli.heuristic_order,
    }
}

fn run_check(cli: &Cli, file: &ProblemFile, at: Option<&str>, lax: bool, tol: &Rational) -> Result<Rendered> {
    let pm = file.matrix()?;
    if let Some(at) = at {
        let p = parse_point(at)?;
        let policy = if lax { BoxPolicy::Lax } else { BoxPolicy::Strict };
        let m = pm.evaluate(&p, policy)?;
        let det = det_exact(&m);
        let singular = det.is_zero();
        return Ok(Rendered {
            code: if singular { 2 } else { 0 },
            command: "check",
            status: if singular { "Singular" } else { "Nonsingular" }.to_string(),
            text: format!(
                "det A(p) = {det}\n{}\n",
                if singular { "singular" } else { "nonsingular" }
            ),
            result: json!({
                "at": p.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "det": det.to_string(),
                "singular": singular,
            }),
            checks: Vec::new(),
        });
    }
    let nm = pm.normalize();
    if let Some(t) = cli.reduce {
        match check_regularity_reduced_sufficient(&nm, t, tol) {
            Ok(r) => {
                return Ok(Rendered {
                    code: report::exit_code(r.status),
                    command: "check",
                    status: report::status_name(r.status).to_string(),
                    text: report::reduced_text(&r, cli.digits),
                    result: to_value(&r),
                    checks: Vec::new(),
                })
            }
            Err(Error::CenterSingular) => {}
            Err(e) => return Err(e),
        }
    }
    let v = check_regularity(&nm, &options(cli, tol, cli.exhaustive));
    let checks = if cli.selfcheck { verdict_checks(&pm, &nm, &v) } else { Vec::new() };
    Ok(Rendered {
        code: report::exit_code(v.status),
        command: "check",
        status: report::status_name(v.status).to_string(),
        text: report::verdict_text(&v, cli.digits),
        result: to_value(&v),
        checks,
    })
}

fn run_witness(cli: &Cli, file: &ProblemFile, tol: &Rational) -> Result<Rendered> {
    let pm = file.matrix()?;
    let nm = pm.normalize();
    let v = check_regularity(&nm, &options(cli, tol, true));
    let mut text = String::new();
    if v.witnesses.is_empty() {
        text.push_str(&format!("Regular, no witnesses on {} slices\n", v.slices.len()));
    } else if v.center_singular {
        text.push_str(&report::verdict_text(&v, cli.digits));
    } else {
        let singular: Vec<_> = v.slices.iter().filter(|s| s.roots != Some(0)).collect();
        text.push_str(&format!(
            "Singular, {} witnesses on {} of {} slices\n",
            v.witnesses.len(),
            singular.len(),
            v.slices.len()
        ));
        for s in singular {
            let points: Vec<String> = v
                .witnesses
                .iter()
                .filter(|w| w.key.as_ref() == Some(&s.key))
                .map(|w| {
                    let p = report::vector_text(&w.point, cli.digits);
                    if w.whole_slice {
                        format!("whole slice, e.g. {p}")
                    } else {
                        p
                    }
                })
                .collect();
            text.push_str(&format!("  {}: det = {}\n", s.key, s.det));
            for p in points {
                text.push_str(&format!("    p = {p}\n"));
            }
        }
    }
    let checks = if cli.selfcheck { verdict_checks(&pm, &nm, &v) } else { Vec::new() };
    Ok(Rendered {
        code: report::exit_code(v.status),
        command: "witness",
        status: report::status_name(v.status).to_string(),
        text,
        result: to_value(&v),
        checks,
    })
}

fn run_hull(cli: &Cli, file: &ProblemFile, tol: &Rational) -> Result<Rendered> {
    let sys = file
        .system()?
        .ok_or_else(|| usage("b0", "the hull needs a right-hand side b0"))?;
    let h = solve_hull(&sys.normalize(), tol);
    let singular = matches!(h.status, HullStatus::SingularityReport(_));
    let mut checks = Vec::new();
    if cli.selfcheck {
        if let HullStatus::Hull = h.status {
            let inner = sample_hull_inner(&sys, 1000, 0);
            let ok = inner.iter().zip(&h.hull).all(|(i, o)| o.contains_interval(i));
            checks.push(SelfCheck::new("sampled inner hull", ok, "1000 random parameter points"));
        }
        let v = check_regularity(&sys.matrix().normalize(), &options(cli, tol, false));
        checks.push(SelfCheck::new(
            "agreement with check",
            singular == (v.status == Status::Singular),
            format!("check reports {}", report::status_name(v.status)),
        ));
    }
    Ok(Rendered {
        code: if singular { 2 } else { 0 },
        command: "hull",
        status: if singular { "Singular" } else { "Hull" }.to_string(),
        text: report::hull_text(&h, cli.digits),
        result: to_value(&h),
        checks,
    })
}

fn run_radius(cli: &Cli, file: &ProblemFile, tol: &Rational) -> Result<Rendered> {
    let nm = file.matrix()?.normalize();
    let r = regularity_radius(&nm, tol);
    let status = match &r.kind {
        RadiusKind::Finite(_) => "Finite",
        RadiusKind::Infinite => "Infinite",
        RadiusKind::Zero => "Zero",
    };
    let mut checks = Vec::new();
    if cli.selfcheck {
        if let Some(w) = &r.witness {
            checks.push(SelfCheck::new(
                "witness matrix",
                w.validated,
                "determinant vanishes or changes sign across the scale bracket",
            ));
        }
        let v = check_regularity(&nm, &options(cli, tol, false));
        let radius_singular = match &r.kind {
            RadiusKind::Zero => Some(true),
            RadiusKind::Infinite => Some(false),
            RadiusKind::Finite(iv) if iv.hi() < &int(1) => Some(true),
            RadiusKind::Finite(iv) if iv.lo() > &int(1) => Some(false),
            RadiusKind::Finite(_) => None,
        };
        let ok = radius_singular.is_none_or(|s| s == (v.status == Status::Singular));
        checks.push(SelfCheck::new(
            "agreement with check",
            ok,
            format!("check reports {}", report::status_name(v.status)),
        ));
    }
    Ok(Rendered {
        code: 0,
        command: "radius",
        status: status.to_string(),
        text: report::radius_text(&r, cli.digits),
        result: to_value(&r),
        checks,
    })
}

fn run_suffcond(cli: &Cli, file: &ProblemFile, tol: &Rational) -> Result<Rendered> {
    let nm = file.matrix()?.normalize();
    let global = match sufficient_condition_rho(&nm, tol) {
        Ok(g) => g,
        Err(Error::CenterSingular) => {
            let v = check_regularity(&nm, &options(cli, tol, false));
            return Ok(Rendered {
                code: 2,
                command: "suffcond",
                status: "Singular".to_string(),
                text: report::verdict_text(&v, cli.digits),
                result: to_value(&v),
                checks: Vec::new(),
            });
        }
        Err(e) => return Err(e),
    };
    let reduced = check_regularity_reduced_sufficient(&nm, cli.reduce.unwrap_or(1), tol)?;
    let regular = global.holds || reduced.status == Status::Regular;
    let mut checks = Vec::new();
    if cli.selfcheck {
        let v = check_regularity(&nm, &options(cli, tol, false));
        let ok = (!global.holds || reduced.status == Status::Regular) && (!regular || v.status == Status::Regular);
        checks.push(SelfCheck::new(
            "verdict hierarchy",
            ok,
            format!("exact check reports {}", report::status_name(v.status)),
        ));
    }
    let status = if regular { Status::Regular } else { Status::Unknown };
    Ok(Rendered {
        code: report::exit_code(status),
        command: "suffcond",
        status: report::status_name(status).to_string(),
        text: format!(
            "{}\n{}{}",
            report::status_name(status),
            report::sufficient_text(&global, cli.digits),
            report::reduced_text(&reduced, cli.digits)
        ),
        result: json!({ "global": global, "reduced": reduced }),
        checks,
    })
}

fn execute(cli: &Cli) -> Result<Rendered> {
    let tol = parse_tol(&cli.tol)?;
    match &cli.command {
        Command::Check { file, at, lax } => run_check(cli, &ProblemFile::load(file)?, at.as_deref(), *lax, &tol),
        Command::Witness { file } => run_witness(cli, &ProblemFile::load(file)?, &tol),
        Command::Hull { file } => run_hull(cli, &ProblemFile::load(file)?, &tol),
        Command::Radius { file } => run_radius(cli, &ProblemFile::load(file)?, &tol),
        Command::Suffcond { file } => run_suffcond(cli, &ProblemFile::load(file)?, &tol),
    }
}

fn finish(cli: &Cli, r: Rendered) -> Outcome {
    let failed: Vec<&SelfCheck> = r.checks.iter().filter(|c| !c.ok).collect();
    let code = if failed.is_empty() { r.code } else { 1 };
    let stderr = failed
        .iter()
        .map(|c| format!("selfcheck failed: {}: {}\n", c.name, c.detail))
        .collect();
    let stdout = match cli.format {
        Format::Text => {
            let mut text = r.text;
            for c in &r.checks {
                text.push_str(&format!(
                    "selfcheck {}: {} ({})\n",
                    c.name,
                    if c.ok { "ok" } else { "FAILED" },
                    c.detail
                ));
            }
            text
        }
        Format::Machine => {
            let mut obj = json!({
                "command": r.command,
                "status": r.status,
                "exit_code": code,
                "result": r.result,
            });
            if cli.selfcheck {
                obj["selfcheck"] = to_value(&r.checks);
            }
            serde_json::to_string_pretty(&obj).expect("json") + "\n"
        }
    };
    Outcome { code, stdout, stderr }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match cli.parallel {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(usage("--parallel", e.to_string())),
        },
        None => execute(&cli),
    };
    match result {
        Ok(r) => finish(&cli, r),
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

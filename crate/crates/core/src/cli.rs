//! The `gregzeta` command line.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{self, Rational};
use crate::asymptotic::{main_term, main_term_hurwitz, EpsilonVector};
use crate::bernoulli::BernoulliCache;
use crate::error::{Error, Result};
use crate::gregory::{g1_series, gregory_series, gtilde_series, hurwitz_log, l_series};
use crate::series::{log1p, x_over_log1p, Ring, Series2};
use crate::table::{self, TableBounds, TableName};
use crate::verify::{run_all_with, run_check, CheckId, CheckReport, Profile, MAX_ORDER};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gregzeta",
    version,
    about = "Exact coefficients of multiple zeta functions at the origin"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a coefficient table.
    Table {
        #[arg(value_parser = parse_table)]
        name: TableName,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
        /// Last `r` (cir, cira).
        #[arg(long)]
        max_r: Option<usize>,
        /// Last `n` (lambda, st1).
        #[arg(long)]
        order: Option<usize>,
        /// Last row index (gmn, g1, gtilde, gmna).
        #[arg(long)]
        rows: Option<usize>,
        /// Last column index (gmn, g1, gtilde, gmna).
        #[arg(long)]
        cols: Option<usize>,
    },
    /// Run the identity checks.
    Check {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Run only these check ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Add DELTA to B_N before running, as `N:DELTA`.
        #[arg(long, hide = true)]
        perturb_bernoulli: Option<String>,
    },
    /// Main term of the expansion at the origin for the given ε.
    Eval {
        #[arg(required = true, allow_negative_numbers = true)]
        eps: Vec<String>,
        /// Hurwitz shifts a_1, ..., a_r.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        a: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Dump generating-series coefficients.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    #[value(name = "log1p")]
    Log1p,
    #[value(name = "xoverlog")]
    XOverLog,
    #[value(name = "G")]
    G,
    #[value(name = "Gtilde")]
    Gtilde,
    #[value(name = "G1")]
    G1,
    #[value(name = "Gpoly")]
    Gpoly,
    #[value(name = "L")]
    L,
}

fn parse_table(s: &str) -> std::result::Result<TableName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs a parsed command, writing data to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Table {
            name,
            format,
            max_r,
            order,
            rows,
            cols,
        } => cmd_table(name, format, max_r, order, rows, cols, out),
        Command::Check {
            profile,
            format,
            only,
            perturb_bernoulli,
        } => cmd_check(
            profile,
            format,
            &only,
            perturb_bernoulli.as_deref(),
            out,
            err,
        ),
        Command::Eval { eps, a, format } => cmd_eval(&eps, a.as_deref(), format, out),
        Command::Series {
            name,
            order,
            format,
        } => cmd_series(name, order, format, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "gregzeta: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parameter(format!("write failed: {e}"))
}

fn cmd_table(
    name: TableName,
    format: TableFormat,
    max_r: Option<usize>,
    order: Option<usize>,
    rows: Option<usize>,
    cols: Option<usize>,
    out: &mut dyn Write,
) -> Result<u8> {
    let misuse = |flag: &str| {
        Err(Error::Parameter(format!(
            "--{flag} does not apply to table {name}"
        )))
    };
    let mut b = name.default_bounds();
    match name {
        TableName::Cir | TableName::Cira => {
            if order.is_some() || rows.is_some() || cols.is_some() {
                return misuse("order/--rows/--cols");
            }
            if let Some(r) = max_r {
                b = TableBounds { rows: r, cols: r };
            }
        }
        TableName::Lambda | TableName::St1 => {
            if max_r.is_some() || rows.is_some() || cols.is_some() {
                return misuse("max-r/--rows/--cols");
            }
            if let Some(n) = order {
                b.rows = n;
                if name == TableName::St1 {
                    b.cols = n + 1;
                }
            }
        }
        _ => {
            if max_r.is_some() || order.is_some() {
                return misuse("max-r/--order");
            }
            b.rows = rows.unwrap_or(b.rows);
            b.cols = cols.unwrap_or(b.cols);
        }
    }
    let t = table::build(name, Some(b), BernoulliCache::global())?;
    let text = match format {
        TableFormat::Json => t.to_json() + "\n",
        TableFormat::Csv => t.to_csv(),
        TableFormat::Markdown => t.to_markdown(),
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn parse_perturbation(spec: &str) -> Result<BernoulliCache> {
    let (n, delta) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected N:DELTA, got {spec:?}")))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad Bernoulli index {n:?}")))?;
    Ok(BernoulliCache::with_perturbation(n, arith::parse(delta)?))
}

fn report_line(r: &CheckReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string(r).expect("reports serialize"),
        ReportFormat::Text => {
            let status = if r.passed { "PASS" } else { "FAIL" };
            let mut line = format!(
                "{status} {:<10} {:<28} {:>9.1} ms",
                r.check_id.as_str(),
                r.range,
                r.elapsed.as_secs_f64() * 1e3
            );
            if let Some(ce) = &r.counterexample {
                line += &format!("\n     at {}: {} != {}", ce.params, ce.lhs, ce.rhs);
            }
            line
        }
    }
}

fn cmd_check(
    profile: ProfileArg,
    format: ReportFormat,
    only: &[String],
    perturb: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let profile = match profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let owned;
    let bern = match perturb {
        Some(spec) => {
            owned = parse_perturbation(spec)?;
            let _ = writeln!(
                err,
                "gregzeta: running with perturbed Bernoulli numbers ({spec})"
            );
            &owned
        }
        None => BernoulliCache::global(),
    };
    let mut write_err = None;
    let mut emit = |r: &CheckReport| {
        if let Err(e) = writeln!(out, "{}", report_line(r, format)).and_then(|_| out.flush()) {
            write_err.get_or_insert(e);
        }
    };
    let reports = if only.is_empty() {
        run_all_with(profile, bern, &mut emit)
    } else {
        let ids = only
            .iter()
            .map(|s| s.parse::<CheckId>())
            .collect::<Result<Vec<_>>>()?;
        let bounds = profile.bounds();
        let mut reports = Vec::new();
        for id in ids {
            let r = run_check(id, &bounds, bern)?;
            emit(&r);
            reports.push(r);
        }
        reports
    };
    if let Some(e) = write_err {
        return Err(io(e));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(
        err,
        "{} checks, {} passed, {} failed",
        reports.len(),
        reports.len() - failed,
        failed
    );
    Ok(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| arith::parse(s)).collect()
}

fn cmd_eval(
    eps: &[String],
    a: Option<&[String]>,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<u8> {
    let e = EpsilonVector::new(parse_all(eps)?)?;
    let bern = BernoulliCache::global();
    let a = a.map(parse_all).transpose()?;
    let value = match &a {
        Some(a) => main_term_hurwitz(&e, a, bern)?,
        None => main_term(&e, bern)?,
    };
    let text = match format {
        ReportFormat::Text => value.to_string(),
        ReportFormat::Json => {
            let strs = |v: &[Rational]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>();
            json!({
                "eps": strs(e.entries()),
                "a": a.as_deref().map(strs),
                "main_term": value.to_string(),
            })
            .to_string()
        }
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(EXIT_OK)
}

fn bivariate_text<R: Ring>(s: &Series2<R>) -> String {
    let mut text = String::new();
    for total in 0..=s.order() {
        for m in (0..=total).rev() {
            let n = total - m;
            text += &format!("{m} {n} {}\n", s.coeff(m, n).to_json_text());
        }
    }
    text
}

trait JsonText {
    fn to_json_text(&self) -> String;
}

impl<R: Ring> JsonText for R {
    fn to_json_text(&self) -> String {
        match self.to_json() {
            Value::String(s) => s,
            v => v.to_string(),
        }
    }
}

fn cmd_series(
    name: SeriesName,
    order: usize,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<u8> {
    if order > MAX_ORDER {
        return Err(Error::Parameter(format!(
            "order {order} exceeds the supported limit {MAX_ORDER}"
        )));
    }
    let (json, text) = match name {
        SeriesName::Log1p | SeriesName::XOverLog => {
            let s = if name == SeriesName::Log1p {
                log1p(order)
            } else {
                x_over_log1p(order)
            };
            let text = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{k} {c}\n"))
                .collect();
            (s.to_json(), text)
        }
        SeriesName::L => {
            let s = l_series(order.max(1)).truncate(order);
            let text = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{k} {c}\n"))
                .collect();
            (s.to_json(), text)
        }
        SeriesName::G | SeriesName::G1 | SeriesName::Gtilde => {
            let ell = log1p(order + 1);
            let s = match name {
                SeriesName::G => gregory_series(&ell, order)?,
                SeriesName::G1 => g1_series(&ell, order)?,
                _ => gtilde_series(&ell, order)?,
            };
            (s.to_json(), bivariate_text(&s))
        }
        SeriesName::Gpoly => {
            let s = gregory_series(&hurwitz_log(order + 1), order)?
                .map(|p| p.clone().with_variable('a'));
            (s.to_json(), bivariate_text(&s))
        }
    };
    let rendered = match format {
        ReportFormat::Json => serde_json::to_string(&json).expect("values serialize") + "\n",
        ReportFormat::Text => text,
    };
    out.write_all(rendered.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

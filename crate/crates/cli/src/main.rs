//! `qlambda`: K-theory and Cartan invariants of Q^λ from the minimal
//! polynomial of λ.
//!
//! Exit codes: 0 on success, 2 when an input is refused, 1 on an internal
//! failure.

mod document;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use qlambda::abgroups::{marked_isomorphic, DEFAULT_ORBIT_BOUND};
use qlambda::classify::{compare_reports, find_cuntz_realization, search_pairs, ClassifyError};
use qlambda::invariants::table::{formula_row, TableRegime};
use qlambda::invariants::{full_report, InvariantError, InvariantReport};
use qlambda::polyring::{parse_poly, IntPoly};
use serde_json::json;

use document::{
    Body, CompareBody, ComputedRow, Failure, OutputDocument, SkippedTuple, Status, TableBody,
    TableRow, SCHEMA_VERSION,
};

/// Largest number of parameter tuples one `table` invocation may visit.
const MAX_TABLE_TUPLES: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(name = "qlambda", version, about = "Classification invariants of Q^λ")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// State bound for marked-group isomorphism searches.
    #[arg(long, default_value_t = DEFAULT_ORBIT_BOUND, global = true)]
    max_orbit_states: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full invariant report for one polynomial, e.g. "T^2-3T+1".
    Report { poly: String },
    /// Compare the invariants of two polynomials.
    Compare { f: String, g: String },
    /// A polynomial realizing O_n unitally, with its report.
    Cuntz {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Search a coefficient box for pairs with equal K-theory and different
    /// Cartan invariants.
    Search {
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        coeff_bound: u64,
    },
    /// Compare computed invariants with a table row over parameter ranges.
    Table {
        #[arg(value_parser = parse_regime)]
        regime: TableRegime,
        /// A value or an inclusive range `lo..hi`.
        #[arg(long, allow_hyphen_values = true)]
        a0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a2: Option<String>,
    },
}

fn parse_regime(s: &str) -> Result<TableRegime, String> {
    s.parse()
        .map_err(|_| format!("unknown regime '{s}', expected one of d1, d2a, d2b, d3a, d3b"))
}

fn parse_input(s: &str) -> Result<IntPoly, ClassifyError> {
    parse_poly(s).map_err(|e| ClassifyError::Invariant(InvariantError::from(e)))
}

fn parse_range(name: &str, s: &str) -> Result<(i64, i64), ClassifyError> {
    let bad = || {
        ClassifyError::InvalidParameter(format!("--{name} '{s}': expected an integer or lo..hi"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(ClassifyError::InvalidParameter(format!(
            "--{name} '{s}': empty range"
        )));
    }
    Ok((lo, hi))
}

fn report_of(f: &IntPoly) -> Result<InvariantReport, ClassifyError> {
    Ok(full_report(f)?)
}

fn cmd_compare(f: &str, g: &str, bound: usize) -> Result<Body, ClassifyError> {
    let (f, g) = (parse_input(f)?, parse_input(g)?);
    let (a, b) = (report_of(&f)?, report_of(&g)?);
    let verdict = compare_reports(&a, &b, bound)?;
    Ok(Body::Compare(Box::new(CompareBody {
        f,
        g,
        f_ktriple: a.ktriple,
        g_ktriple: b.ktriple,
        verdict,
    })))
}

fn cmd_table(
    regime: TableRegime,
    given: [(&str, &Option<String>); 3],
    bound: usize,
) -> Result<Body, ClassifyError> {
    let names = regime.free_parameters();
    for (name, value) in given {
        if value.is_some() && !names.contains(&name) {
            return Err(ClassifyError::InvalidParameter(format!(
                "--{name} is not a parameter of {regime} (parameters: {})",
                names.join(", ")
            )));
        }
    }
    let mut ranges = Vec::new();
    for name in names {
        let value = given
            .iter()
            .find(|(n, _)| n == name)
            .and_then(|(_, v)| v.as_deref())
            .ok_or_else(|| ClassifyError::InvalidParameter(format!("{regime} needs --{name}")))?;
        ranges.push(parse_range(name, value)?);
    }
    let tuples = ranges.iter().try_fold(1u64, |acc, &(lo, hi)| {
        let width = u64::try_from(i128::from(hi) - i128::from(lo) + 1).ok()?;
        acc.checked_mul(width)
    });
    if tuples.is_none_or(|t| t > MAX_TABLE_TUPLES) {
        return Err(ClassifyError::InvalidParameter(format!(
            "more than {MAX_TABLE_TUPLES} parameter tuples"
        )));
    }

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let mut params: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        match regime.polynomial(&params) {
            None => skipped.push(SkippedTuple {
                parameters: params.clone(),
                poly: None,
                reason: format!("outside {regime}"),
            }),
            Some(f) => match full_report(&f) {
                Err(e) if e.is_refusal() => skipped.push(SkippedTuple {
                    parameters: params.clone(),
                    poly: Some(f),
                    reason: e.code().to_string(),
                }),
                Err(e) => return Err(e.into()),
                Ok(report) => {
                    let formula = formula_row(&f).ok_or_else(|| {
                        ClassifyError::Invariant(InvariantError::Internal(format!(
                            "{f}: no table row"
                        )))
                    })?;
                    let unit_match = marked_isomorphic(report.ktriple.k0(), &formula.k0, bound)
                        .map_err(|e| ClassifyError::Invariant(InvariantError::from(e)))?;
                    let matches = unit_match
                        && report.ktriple.k1() == &formula.k1
                        && report.homology_coeff == formula.homology_coeff
                        && report.homology_g == formula.homology_g;
                    rows.push(TableRow {
                        parameters: params.clone(),
                        poly: f,
                        computed: ComputedRow {
                            ktriple: report.ktriple,
                            homology_coeff: report.homology_coeff,
                            homology_g: report.homology_g,
                        },
                        formula,
                        matches,
                    });
                }
            },
        }
        // odometer over the ranges, last parameter fastest
        let mut i = params.len();
        loop {
            if i == 0 {
                let all_match = rows.iter().all(|r| r.matches);
                return Ok(Body::Table(TableBody {
                    regime,
                    parameter_names: names.iter().map(|s| s.to_string()).collect(),
                    rows,
                    skipped,
                    all_match,
                }));
            }
            i -= 1;
            if params[i] < ranges[i].1 {
                params[i] += 1;
                break;
            }
            params[i] = ranges[i].0;
        }
    }
}

fn run(cli: &Cli) -> (String, serde_json::Value, Result<Body, ClassifyError>) {
    let bound = cli.max_orbit_states;
    match &cli.command {
        Command::Report { poly } => (
            "report".into(),
            json!({ "poly": poly }),
            parse_input(poly)
                .and_then(|f| report_of(&f))
                .map(|r| Body::Report(Box::new(r))),
        ),
        Command::Compare { f, g } => (
            "compare".into(),
            json!({ "f": f, "g": g }),
            cmd_compare(f, g, bound),
        ),
        Command::Cuntz { n } => (
            "cuntz".into(),
            json!({ "n": n }),
            n.trim()
                .parse::<BigInt>()
                .map_err(|_| ClassifyError::InvalidParameter(format!("'{n}' is not an integer")))
                .and_then(|n| find_cuntz_realization(&n))
                .map(|c| Body::Cuntz(Box::new(c))),
        ),
        Command::Search {
            max_degree,
            coeff_bound,
        } => (
            "search".into(),
            json!({ "max_degree": max_degree, "coeff_bound": coeff_bound, "max_orbit_states": bound }),
            search_pairs(*max_degree, *coeff_bound, bound).map(Body::Search),
        ),
        Command::Table { regime, a0, a1, a2 } => (
            "table".into(),
            json!({ "regime": regime, "a0": a0, "a1": a1, "a2": a2, "max_orbit_states": bound }),
            cmd_table(*regime, [("a0", a0), ("a1", a1), ("a2", a2)], bound),
        ),
    }
}

fn build(cli: &Cli) -> (OutputDocument, u8) {
    let (command, inputs, outcome) = run(cli);
    let (status, body, code) = match outcome {
        Ok(body) => (Status::Ok, body, 0),
        Err(e) => {
            let (status, code) = if e.is_refusal() {
                (Status::Refused, 2)
            } else {
                (Status::Error, 1)
            };
            let failure = Failure {
                code: e.code().to_string(),
                message: e.to_string(),
            };
            (status, Body::Failure(failure), code)
        }
    };
    let doc = OutputDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        command,
        inputs,
        status,
        body,
    };
    (doc, code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, mut code) = build(&cli);
    let status = doc.status;
    let (text, to_stdout) = match cli.format {
        Format::Json => match serde_json::to_string_pretty(&doc) {
            Ok(text) => (text + "\n", true),
            Err(e) => {
                code = 1;
                (
                    format!("error [internal]: cannot serialize output: {e}\n"),
                    false,
                )
            }
        },
        Format::Text => (render::render(&doc), status == Status::Ok),
    };
    // a closed pipe downstream is not an error of ours
    let written = if to_stdout {
        std::io::stdout().lock().write_all(text.as_bytes())
    } else {
        std::io::stderr().lock().write_all(text.as_bytes())
    };
    if let Err(e) = written {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(args: &[&str]) -> OutputDocument {
        let cli =
            Cli::try_parse_from(std::iter::once("qlambda").chain(args.iter().copied())).unwrap();
        build(&cli).0
    }

    #[test]
    fn documents_round_trip() {
        let corpus: &[&[&str]] = &[
            &["report", "T^2-3T+1"],
            &["report", "T^4-2"],
            &["report", "T^2-1"],
            &["compare", "T^2-3T+1", "T^3+T^2-1"],
            &["cuntz", "5"],
            &["cuntz", "99999999999999999999999"],
            &["search", "--max-degree", "3", "--coeff-bound", "2"],
            &[
                "table", "d3b", "--a2", "-2..2", "--a1", "-2..2", "--a0", "-1..1",
            ],
            &["table", "d1", "--a0", "x"],
        ];
        for args in corpus {
            let d = doc(args);
            let text = serde_json::to_string(&d).unwrap();
            let back: OutputDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back, d, "{args:?}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("a0", "-3..3").unwrap(), (-3, 3));
        assert_eq!(parse_range("a0", " -5 ").unwrap(), (-5, -5));
        assert_eq!(
            parse_range("a0", "-5..-7").unwrap_err().code(),
            "invalid_parameter"
        );
        assert!(parse_range("a0", "1..").is_err());
    }

    #[test]
    fn unknown_body_is_rejected() {
        let text =
            r#"{"schema_version":"1.0","command":"plot","inputs":{},"status":"ok","body":{}}"#;
        assert!(serde_json::from_str::<OutputDocument>(text).is_err());
    }
}

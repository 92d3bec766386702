mod args;

use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};

use args::{Cli, Command, Format, SeriesKind, SuiteArg, MAX_ORDER};
use secant_core::engine::{castelnuovo_series, hphipsi0_series, hpsi_series};
use secant_core::secant::compute;
use secant_core::verify::run_suite;
use secant_core::{rational_to_string, CountReport, Engine, Error, Expr, Series, Suite};

/// Failure carrying its exit code: 2 for bad input, 3 for an engine inconsistency.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_internal() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(|| run(&cli)).unwrap_or_else(|_| {
        Err(Failure {
            code: 3,
            message: "internal panic".into(),
        })
    });
    match outcome {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| invalid(e.to_string()))?;
    }
    let engine = match &cli.cache {
        Some(path) => Engine::with_cache_file(path)?,
        None => Engine::new(),
    };
    match &cli.command {
        Command::Compute { problem, d, g } => {
            let report = compute(&engine, problem.e, problem.f, *d, *g)?;
            Ok(render_counts(&[report], cli.format, false))
        }
        Command::Table {
            problem,
            grid_d,
            grid_g,
        } => {
            let cells: Vec<(i64, i64)> = grid_d
                .clone()
                .flat_map(|d| grid_g.clone().map(move |g| (d, g)))
                .collect();
            let reports = cells
                .par_iter()
                .map(|&(d, g)| compute(&engine, problem.e, problem.f, d, g))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(render_counts(&reports, cli.format, true))
        }
        Command::Series { kind, d, g, order } => {
            if *order > MAX_ORDER {
                return Err(invalid(format!("order {order} exceeds {MAX_ORDER}")));
            }
            let series = match kind {
                SeriesKind::Castelnuovo => castelnuovo_series(*d, *g, *order)?,
                SeriesKind::Hpsi => hpsi_series(*g, *d, *order),
                SeriesKind::Hphipsi0 => hphipsi0_series(*d, *order),
            };
            Ok(render_series(*kind, *d, *g, &series, cli.format))
        }
        Command::Universal { monomial } => universal(&engine, monomial, cli.format),
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Fast => Suite::Fast,
                SuiteArg::Full => Suite::Full,
            };
            let report = run_suite(&engine, suite);
            let text = render_verify(&report, cli.format);
            if report.passed {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure {
                    code: 3,
                    message: "hard invariant failed".into(),
                })
            }
        }
    }
}

fn count_json(r: &CountReport) -> Value {
    let p = &r.problem;
    json!({
        "e": p.e,
        "f": p.f,
        "d": p.d,
        "g": p.g,
        "r": p.r,
        "expected_dim": r.expected_dim,
        "count": rational_to_string(&r.count),
        "routes_agree": true,
        "warnings": r.warnings.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    })
}

fn render_counts(reports: &[CountReport], format: Format, as_list: bool) -> String {
    match format {
        Format::Json => {
            let v = if as_list {
                Value::Array(reports.iter().map(count_json).collect())
            } else {
                count_json(&reports[0])
            };
            format!("{}\n", serde_json::to_string(&v).expect("json"))
        }
        Format::Csv => {
            let mut out = String::from("e,f,d,g,r,count\n");
            for r in reports {
                let p = &r.problem;
                out += &format!(
                    "{},{},{},{},{},{}\n",
                    p.e,
                    p.f,
                    p.d,
                    p.g,
                    p.r,
                    rational_to_string(&r.count)
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let p = &r.problem;
                out += &format!(
                    "e={} f={} d={} g={} r={} expected_dim={} count={}\n",
                    p.e,
                    p.f,
                    p.d,
                    p.g,
                    p.r,
                    r.expected_dim,
                    rational_to_string(&r.count)
                );
                for w in &r.warnings {
                    out += &format!("  warning: {w}\n");
                }
            }
            out
        }
    }
}

fn render_series(kind: SeriesKind, d: i64, g: i64, series: &Series, format: Format) -> String {
    let coeffs: Vec<String> = (0..=series.order())
        .map(|k| rational_to_string(&series.coeff(k)))
        .collect();
    let name = match kind {
        SeriesKind::Castelnuovo => "castelnuovo",
        SeriesKind::Hpsi => "hpsi",
        SeriesKind::Hphipsi0 => "hphipsi0",
    };
    match format {
        Format::Json => format!(
            "{}\n",
            json!({"kind": name, "d": d, "g": g, "order": series.order(), "coefficients": coeffs})
        ),
        Format::Csv => {
            let mut out = String::from("k,coefficient\n");
            for (k, c) in coeffs.iter().enumerate() {
                out += &format!("{k},{c}\n");
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, c) in coeffs.iter().enumerate() {
                out += &format!("[{k}] {c}\n");
            }
            out
        }
    }
}

fn universal(engine: &Engine, text: &str, format: Format) -> Result<String, Failure> {
    let expr = Expr::parse(text)?;
    if expr.terms().len() != 1 {
        return Err(invalid(format!("{text:?} is not a single monomial")));
    }
    let k = expr
        .weight()
        .ok_or_else(|| invalid(format!("{text:?} is not homogeneous")))?;
    let u = engine.universal(&expr, k)?;
    let held_out = &u.witness().held_out;
    match format {
        Format::Json => {
            let v = json!({
                "monomial": expr.to_string(),
                "k": k,
                "coefficients": u.coefficient_json(),
                "degree_bound": u.degree_bound(),
                "held_out": {
                    "verified": held_out.len(),
                    "points": held_out.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                },
            });
            Ok(format!("{v}\n"))
        }
        Format::Csv => {
            let mut out = String::from("term,coefficient\n");
            for (label, c) in u.coefficients() {
                out += &format!("{label},{c}\n");
            }
            Ok(out)
        }
        Format::Text => {
            let terms: Vec<String> = u
                .coefficients()
                .into_iter()
                .map(|(label, c)| format!("({c})*{label}"))
                .collect();
            let poly = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            Ok(format!(
                "integral of {} over C^[{k}] = {poly}\ndegree bound {}, {} held-out points verified\n",
                expr,
                u.degree_bound(),
                held_out.len()
            ))
        }
    }
}

fn render_verify(report: &secant_core::Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(report).expect("json")),
        Format::Csv => {
            let mut out = String::from("criterion,id,hard,passed\n");
            for c in &report.checks {
                out += &format!("{},{},{},{}\n", c.criterion, c.id, c.hard, c.passed);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let status = match (c.passed, c.hard) {
                    (true, _) => "PASS",
                    (false, true) => "FAIL",
                    (false, false) => "NOTE",
                };
                out += &format!("{status} [{}] {}: {}\n", c.criterion, c.id, c.detail);
            }
            for f in &report.findings {
                out += &format!(
                    "finding {}: printed {} is {}; engine: {}\n",
                    f.id,
                    f.printed,
                    if f.printed_consistent { "consistent" } else { "inconsistent" },
                    f.engine
                );
            }
            out
        }
    }
}

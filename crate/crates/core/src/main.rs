use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use scov::actions::{act, ActionKind};
use scov::group::{element_cap, group_order, ColoredPermutation};
use scov::groebner::groebner_basis;
use scov::harness::{
    chevalley_count, default_horizon, expected_dimension, hilbert_by_route, run_verification, Route, VerifyOptions,
};
use scov::paths::{basis_monomials, enumerate_dyck, minimal_transdiagonal, path_of};
use scov::poly::{parse_cyclotomic, render_monomial, ExponentVector};
use scov::qsym::qinv_generators;
use scov::Error;

/// Exact computations with the quasi-symmetrizing action of G(n,m) and the
/// super-coinvariant space SCov(n,m).
#[derive(Parser)]
#[command(name = "scov", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Truncation degree for Gröbner and linear-algebra computations.
    #[arg(long, global = true)]
    max_deg: Option<u32>,
    /// Maximum number of enumerated items (defaults to $SCOV_ELEMENT_CAP or 2000000).
    #[arg(long, global = true)]
    cap: Option<u128>,
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of SCov(n,m), counted from the monomial basis.
    Dim(Params),
    /// Hilbert series of SCov(n,m), coefficients from degree 0.
    Hilbert {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value = "basis")]
        method: Route,
    },
    /// Monomial basis of SCov(n,m).
    Basis(Params),
    /// Reduced lex Gröbner basis of the ideal of positive-degree quasi-invariants.
    Gb(Params),
    /// Apply a group element to a polynomial.
    Act {
        /// e.g. "sigma=[3,1,2] colors=[1,0,1] m=3"
        #[arg(long)]
        element: ColoredPermutation,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "quasi")]
        action: ActionKind,
    },
    /// Dyck vectors and minimal transdiagonal vectors of length n, drawn as paths.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dyck_only: bool,
    },
    /// Standard-monomial count of the ideal generated by e_k(X^m), against m^n n!.
    Chevalley(Params),
    /// Cross-check the dimension of SCov(n,m) along several routes.
    Verify {
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long, requires = "n", value_parser = clap::value_parser!(u32).range(1..))]
        m: Option<u32>,
        /// Comma-separated subset of basis,groebner,linear,orthogonal,formula.
        #[arg(long, value_delimiter = ',')]
        routes: Option<Vec<Route>>,
    },
}

/// Cells checked by `verify` when no parameters are given.
const DEFAULT_MATRIX: [(usize, u32); 14] =
    [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)];

enum Outcome {
    Ok,
    Mismatch,
}

fn exponent_json(e: &ExponentVector) -> serde_json::Value {
    json!(e.entries())
}

fn monomial_text(e: &ExponentVector) -> String {
    let s = render_monomial(e);
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn emit(out: &mut impl Write, value: serde_json::Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome, Box<dyn std::error::Error>> {
    let g = cli.global;
    let cap = g.cap.unwrap_or_else(element_cap);
    match cli.command {
        Command::Dim(Params { n, m }) => {
            let dim = basis_monomials(n, m, cap)?.len();
            if g.json {
                emit(out, json!({ "n": n, "m": m, "total": dim }))?;
            } else {
                writeln!(out, "{dim}")?;
            }
        }
        Command::Hilbert { params: Params { n, m }, method } => {
            let max_deg = g.max_deg.unwrap_or_else(|| default_horizon(n, m));
            let opts = VerifyOptions { cap, ..VerifyOptions::default() };
            let series = hilbert_by_route(n, m, method, max_deg, &opts)?;
            if g.json {
                emit(out, json!({ "n": n, "m": m, "route": method, "series": series, "total": series.total() }))?;
            } else {
                writeln!(out, "{series}")?;
            }
        }
        Command::Basis(Params { n, m }) => {
            let basis = basis_monomials(n, m, cap)?;
            if g.json {
                let vectors: Vec<_> = basis.iter().map(exponent_json).collect();
                emit(out, json!({ "n": n, "m": m, "total": basis.len(), "basis": vectors }))?;
            } else {
                for e in &basis {
                    writeln!(out, "{}", monomial_text(e))?;
                }
            }
        }
        Command::Gb(Params { n, m }) => {
            let max_deg = g.max_deg.unwrap_or_else(|| default_horizon(n, m));
            let basis = groebner_basis(n, &qinv_generators(n, m, max_deg), max_deg)?;
            if g.json {
                let mut v = basis.to_json();
                v["n"] = json!(n);
                v["m"] = json!(m);
                emit(out, v)?;
            } else {
                write!(out, "{}", basis.to_text())?;
            }
        }
        Command::Act { element, poly, action } => {
            let p = parse_cyclotomic(&poly, Some(element.n()), element.m())?;
            let image = act(action, &element, &p)?;
            if g.json {
                emit(out, json!({ "element": element.to_string(), "action": action, "input": p.to_string(), "output": image.to_string() }))?;
            } else {
                writeln!(out, "{image}")?;
            }
        }
        Command::Paths { n, dyck_only } => {
            let dyck = enumerate_dyck(n, cap)?;
            let trans = if dyck_only { Vec::new() } else { minimal_transdiagonal(n, n as u32) };
            if g.json {
                let mut v = json!({ "n": n, "dyck": dyck.iter().map(exponent_json).collect::<Vec<_>>() });
                if !dyck_only {
                    v["transdiagonal"] = json!(trans.iter().map(exponent_json).collect::<Vec<_>>());
                }
                emit(out, v)?;
            } else {
                for (label, vectors) in [("dyck", &dyck), ("transdiagonal", &trans)] {
                    for e in vectors {
                        let path = path_of(e);
                        writeln!(out, "{label} {e}  {path}")?;
                        writeln!(out, "{}\n", path.render_ascii())?;
                    }
                }
            }
        }
        Command::Chevalley(Params { n, m }) => {
            let count = chevalley_count(n, m)?;
            let expected = group_order(n, m);
            if g.json {
                emit(out, json!({ "n": n, "m": m, "total": count, "expected": expected, "status": if count == expected { "PASS" } else { "FAIL" } }))?;
            } else {
                writeln!(out, "{count}")?;
            }
            if count != expected {
                return Ok(Outcome::Mismatch);
            }
        }
        Command::Verify { n, m, routes } => {
            let opts = VerifyOptions {
                routes: routes.unwrap_or_else(|| Route::ALL.to_vec()),
                max_deg: g.max_deg,
                cap,
                ..VerifyOptions::default()
            };
            let cells: Vec<(usize, u32)> = match (n, m) {
                (Some(n), Some(m)) => vec![(n, m)],
                _ => DEFAULT_MATRIX.to_vec(),
            };
            let multiple = cells.len() > 1;
            let mut reports = Vec::new();
            for (n, m) in cells {
                let report = run_verification(n, m, &opts)?;
                if !g.json {
                    write!(out, "{}", report.to_text())?;
                    if multiple {
                        writeln!(out)?;
                    }
                }
                reports.push(report);
            }
            let all_pass = reports.iter().all(|r| r.passed());
            if g.json {
                let value = if reports.len() == 1 { reports[0].to_json() } else { json!(reports) };
                emit(out, value)?;
            } else if reports.len() > 1 {
                let expected: Vec<String> = reports.iter().map(|r| format!("{}", expected_dimension(r.n, r.m))).collect();
                writeln!(out, "matrix {} ({})", if all_pass { "PASS" } else { "FAIL" }, expected.join(","))?;
            }
            if !all_pass {
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e.downcast_ref::<Error>() {
                Some(Error::CapExceeded { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

//! Cross-verification of `dim SCov_{n,m} = mⁿ·Cₙ` along independent routes,
//! plus the orthogonal-complement dimension and the Chevalley count.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, hilbert_from_groebner, quotient_hilbert_linear, standard_monomials};
use crate::linalg::{rank, sparse_row};
use crate::paths::{catalan, hilbert_from_basis, minimal_transdiagonal, product_form, single_power_form, HilbertSeries};
use crate::poly::{count_monomials, monomials_of_degree, ExponentVector, RationalPolynomial};
use crate::qsym::{elementary_symmetric, qinv_generators};

/// Largest degree slice (in monomials) the linear-algebra routes will attempt.
pub const DEFAULT_SLICE_CAP: u128 = 5_000;

/// Largest generator count handed to Buchberger.
pub const DEFAULT_GENERATOR_CAP: u128 = 5_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Basis,
    Groebner,
    Linear,
    Orthogonal,
    Formula,
}

impl Route {
    pub const ALL: [Route; 5] = [Route::Basis, Route::Groebner, Route::Linear, Route::Orthogonal, Route::Formula];

    pub fn name(self) -> &'static str {
        match self {
            Route::Basis => "basis",
            Route::Groebner => "groebner",
            Route::Linear => "linear",
            Route::Orthogonal => "orthogonal",
            Route::Formula => "formula",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown route {s:?}") })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Informational discrepancy that does not fail the run.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::Flagged => "FLAGGED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteResult {
    pub route: Route,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<HilbertSeries>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub m: u32,
    pub max_deg: u32,
    /// `mⁿ·Cₙ`.
    pub expected_total: u128,
    pub routes: Vec<RouteResult>,
    pub checks: Vec<Check>,
    pub status: Status,
    pub timings_ms: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn route(&self, route: Route) -> Option<&RouteResult> {
        self.routes.iter().find(|r| r.route == route)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// JSON without the timing block, stable across identical runs.
    pub fn deterministic_json(&self) -> serde_json::Value {
        let mut v = self.to_json();
        v.as_object_mut().expect("object").remove("timings_ms");
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={} m={} max_deg={} expected={}\n", self.n, self.m, self.max_deg, self.expected_total);
        for r in &self.routes {
            let series = r.series.as_ref().map_or("-".to_string(), |s| s.to_string());
            let total = r.total.map_or("-".to_string(), |t| t.to_string());
            out += &format!("route {:<10} {:<7} total={total} series={series}", r.route.name(), r.status.to_string());
            if let Some(note) = &r.note {
                out += &format!(" ({note})");
            }
            out.push('\n');
        }
        for c in &self.checks {
            out += &format!("check {:<18} {:<7} {}\n", c.name, c.status.to_string(), c.detail);
        }
        out += &format!("status {}\n", self.status);
        out
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub routes: Vec<Route>,
    /// Truncation horizon; defaults to [`default_horizon`].
    pub max_deg: Option<u32>,
    /// Cap on enumerated basis monomials.
    pub cap: u128,
    pub slice_cap: u128,
    pub generator_cap: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            routes: Route::ALL.to_vec(),
            max_deg: None,
            cap: crate::group::element_cap(),
            slice_cap: DEFAULT_SLICE_CAP,
            generator_cap: DEFAULT_GENERATOR_CAP,
        }
    }
}

/// `mⁿ·Cₙ`, saturating.
pub fn expected_dimension(n: usize, m: u32) -> u128 {
    (m as u128).checked_pow(n as u32).and_then(|p| p.checked_mul(catalan(n))).unwrap_or(u128::MAX)
}

/// Top degree of the basis monomials, `m(n-1) + (m-1)n`, plus `m`.
pub fn default_horizon(n: usize, m: u32) -> u32 {
    let n = n as u32;
    m * n.saturating_sub(1) + (m - 1) * n + m
}

fn check_slice(n: usize, k: u32, cap: u128) -> Result<()> {
    let needed = count_monomials(n, k);
    if needed > cap {
        return Err(Error::CapExceeded { what: "monomials in a degree slice", needed, cap });
    }
    Ok(())
}

/// Dimension of the degree-`k` polynomials `P` with `Q(∂X)P = 0` for every
/// generator `Q = M_α(X^m)` of degree at most `k`.
pub fn orthogonal_dimension(n: usize, m: u32, k: u32) -> Result<usize> {
    orthogonal_dimension_capped(n, m, k, DEFAULT_SLICE_CAP)
}

pub fn orthogonal_dimension_capped(n: usize, m: u32, k: u32, slice_cap: u128) -> Result<usize> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    check_slice(n, k, slice_cap)?;
    let gens = qinv_generators(n, m, k);
    orthogonal_slice(n, &gens, k)
}

/// Kernel dimension of `P ↦ (Q(∂X)P)_Q` on degree `k`. Row `μ` of the stacked
/// matrix holds the images of `X^μ`, one block of columns per generator.
fn orthogonal_slice(n: usize, gens: &[RationalPolynomial], k: u32) -> Result<usize> {
    let slice = monomials_of_degree(n, k);
    let mut blocks = Vec::new();
    let mut offset = 0;
    for q in gens {
        let d = q.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if d > k {
            continue;
        }
        let target = monomials_of_degree(n, k - d);
        let index: HashMap<ExponentVector, usize> = target.into_iter().enumerate().map(|(i, e)| (e, i)).collect();
        let width = index.len();
        blocks.push((q, index, offset));
        offset += width;
    }
    let rows = slice
        .par_iter()
        .map(|mu| {
            let x_mu = RationalPolynomial::monomial(n, (), mu.clone(), crate::arith::rational(1, 1));
            let mut entries = Vec::new();
            for (q, index, off) in &blocks {
                let image = q.apply_differential(&x_mu)?;
                entries.extend(image.terms().map(|(e, c)| (off + index[e], c.clone())));
            }
            Ok(sparse_row(entries))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(slice.len() - rank(rows, offset))
}

/// Hilbert series of `SCov_{n,m}` in degrees `0..=max_deg` along one route.
pub fn hilbert_by_route(n: usize, m: u32, route: Route, max_deg: u32, opts: &VerifyOptions) -> Result<HilbertSeries> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    match route {
        Route::Basis => hilbert_from_basis(n, m, opts.cap),
        Route::Formula => Ok(product_form(n, m)),
        Route::Groebner => {
            let gens = qinv_generators(n, m, max_deg);
            if gens.len() as u128 > opts.generator_cap {
                return Err(Error::CapExceeded { what: "Gröbner generators", needed: gens.len() as u128, cap: opts.generator_cap });
            }
            Ok(hilbert_from_groebner(&groebner_basis(n, &gens, max_deg)?, max_deg))
        }
        Route::Linear => {
            check_slice(n, max_deg, opts.slice_cap)?;
            quotient_hilbert_linear(n, &qinv_generators(n, m, max_deg), max_deg)
        }
        Route::Orthogonal => {
            check_slice(n, max_deg, opts.slice_cap)?;
            let gens = qinv_generators(n, m, max_deg);
            let coeffs = (0..=max_deg)
                .into_par_iter()
                .map(|k| orthogonal_slice(n, &gens, k).map(|d| d as u64))
                .collect::<Result<Vec<_>>>()?;
            Ok(HilbertSeries::new(coeffs))
        }
    }
}

/// Leading monomials of the reduced basis of `⟨QInv⁺_{n,m}⟩` up to `max_deg`,
/// compared with `m·ε` over the minimal transdiagonal `ε`.
pub fn leading_terms_match(n: usize, m: u32, max_deg: u32) -> Result<(bool, Vec<ExponentVector>, Vec<ExponentVector>)> {
    let g = groebner_basis(n, &qinv_generators(n, m, max_deg), max_deg)?;
    let mut got = g.leading_monomials();
    got.sort();
    let mut predicted: Vec<ExponentVector> = minimal_transdiagonal(n, max_deg / m).iter().map(|e| e.scaled(m)).collect();
    predicted.sort();
    Ok((got == predicted, got, predicted))
}

/// `⟨e_1(X^m), …, e_n(X^m)⟩`.
pub fn chevalley_generators(n: usize, m: u32) -> Vec<RationalPolynomial> {
    (1..=n).map(|k| elementary_symmetric(k, n).expect("k ≤ n").substitute_power(m)).collect()
}

/// Number of standard monomials of `⟨e_k(X^m)⟩`, computed with a horizon one
/// period past the top degree `m·n(n-1)/2 + (m-1)n`.
pub fn chevalley_count(n: usize, m: u32) -> Result<u128> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    let nn = n as u32;
    let horizon = m * nn * nn.saturating_sub(1) / 2 + (m - 1) * nn + m;
    let g = groebner_basis(n, &chevalley_generators(n, m), horizon)?;
    let std = standard_monomials(&g, horizon);
    debug_assert!(std.last().is_none_or(|top| top.is_empty()));
    Ok(std.iter().map(|s| s.len() as u128).sum())
}

fn compute_route(n: usize, m: u32, route: Route, horizon: u32, opts: &VerifyOptions) -> (RouteResult, u64) {
    let start = Instant::now();
    let outcome = hilbert_by_route(n, m, route, horizon, opts);
    let ms = start.elapsed().as_millis() as u64;
    let result = match outcome {
        Ok(series) => {
            RouteResult { route, status: Status::Pass, total: Some(series.total()), series: Some(series), note: None }
        }
        Err(e @ Error::CapExceeded { .. }) => {
            RouteResult { route, status: Status::Skipped, series: None, total: None, note: Some(e.to_string()) }
        }
        Err(e) => RouteResult { route, status: Status::Fail, series: None, total: None, note: Some(e.to_string()) },
    };
    (result, ms)
}

/// Runs the selected routes, compares them coefficient-wise and against `mⁿ·Cₙ`.
pub fn run_verification(n: usize, m: u32, opts: &VerifyOptions) -> Result<VerificationReport> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    let horizon = opts.max_deg.unwrap_or_else(|| default_horizon(n, m));
    let expected = expected_dimension(n, m);
    let mut routes: Vec<Route> = opts.routes.clone();
    routes.sort();
    routes.dedup();
    let cells: Vec<(RouteResult, u64)> = routes.par_iter().map(|&r| compute_route(n, m, r, horizon, opts)).collect();

    let mut timings = BTreeMap::new();
    let mut results = Vec::new();
    for (r, ms) in cells {
        timings.insert(r.route.name().to_string(), ms);
        results.push(r);
    }

    let truncated = |s: &HilbertSeries| HilbertSeries::new(s.coeffs().iter().take(horizon as usize + 1).copied().collect());
    let computed: Vec<&RouteResult> = results.iter().filter(|r| r.status == Status::Pass).collect();
    let mut checks = Vec::new();

    let agree = computed.windows(2).all(|w| {
        truncated(w[0].series.as_ref().unwrap()) == truncated(w[1].series.as_ref().unwrap())
    });
    checks.push(Check {
        name: "route_agreement".into(),
        status: if computed.len() < 2 { Status::Skipped } else if agree { Status::Pass } else { Status::Fail },
        detail: format!("{} routes compared through degree {horizon}", computed.len()),
    });

    let bad_totals: Vec<String> = computed
        .iter()
        .filter(|r| r.total != Some(expected))
        .map(|r| format!("{}={}", r.route, r.total.unwrap()))
        .collect();
    checks.push(Check {
        name: "total".into(),
        status: if computed.is_empty() {
            Status::Skipped
        } else if bad_totals.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        detail: if bad_totals.is_empty() {
            format!("every computed route totals {expected}")
        } else {
            format!("expected {expected}, got {}", bad_totals.join(", "))
        },
    });

    let basis_series = results.iter().find(|r| r.route == Route::Basis).and_then(|r| r.series.clone());
    let product = product_form(n, m);
    checks.push(match &basis_series {
        Some(s) => Check {
            name: "product_form".into(),
            status: if *s == product { Status::Pass } else { Status::Fail },
            detail: format!("basis {s} vs product form {product}"),
        },
        None => Check { name: "product_form".into(), status: Status::Skipped, detail: "basis route not computed".into() },
    });

    let single = single_power_form(n, m);
    let single_ok = single == product;
    checks.push(Check {
        name: "single_power_form".into(),
        status: if single_ok { Status::Pass } else { Status::Flagged },
        detail: if single_ok {
            format!("single-power form agrees: {single}")
        } else {
            format!(
                "single-power form (1-t^m)/(1-t)*F_n(t^m) = {single} totals {} but the basis count is {}",
                single.total(),
                product.total()
            )
        },
    });

    if routes.contains(&Route::Groebner) && results.iter().any(|r| r.route == Route::Groebner && r.status == Status::Pass) {
        let start = Instant::now();
        let (ok, got, predicted) = leading_terms_match(n, m, horizon)?;
        timings.insert("leading_terms".into(), start.elapsed().as_millis() as u64);
        checks.push(Check {
            name: "leading_terms".into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: format!("{} leading monomials, {} predicted", got.len(), predicted.len()),
        });
    }

    let failed = results.iter().any(|r| r.status == Status::Fail) || checks.iter().any(|c| c.status == Status::Fail);
    Ok(VerificationReport {
        n,
        m,
        max_deg: horizon,
        expected_total: expected,
        routes: results,
        checks,
        status: if failed { Status::Fail } else { Status::Pass },
        timings_ms: timings,
    })
}

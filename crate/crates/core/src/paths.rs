//! Exponent vectors as lattice paths, Dyck vectors, the monomial basis
//! `{X^{mη+α} : η Dyck, 0 ≤ α_i < m}` and Hilbert series.
//!
//! `ν` is read as the North/East path that takes `ν_1` East steps, one North
//! step, `ν_2` East steps, one North step, and so on. The path is Dyck when it
//! never goes strictly below the diagonal, which amounts to
//! `ν_1 + … + ν_i ≤ i - 1` for every `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ExponentVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    East,
    North,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Vertices visited, starting at the origin.
    pub fn vertices(&self) -> Vec<(u32, u32)> {
        let mut at = (0, 0);
        let mut out = vec![at];
        for s in &self.steps {
            match s {
                Step::East => at.0 += 1,
                Step::North => at.1 += 1,
            }
            out.push(at);
        }
        out
    }

    /// Inverse of [`path_of`]: lengths of the East runs preceding each North step.
    pub fn to_vector(&self) -> Result<ExponentVector> {
        if self.steps.last().is_some_and(|s| *s == Step::East) {
            return Err(Error::InvalidElement("path must end with a North step".into()));
        }
        let mut out = Vec::new();
        let mut run = 0;
        for s in &self.steps {
            match s {
                Step::East => run += 1,
                Step::North => {
                    out.push(run);
                    run = 0;
                }
            }
        }
        Ok(ExponentVector::from(out))
    }

    /// ASCII drawing, top row first: `_` for East steps, `|` for North steps,
    /// `.` marks the diagonal where the path does not cover it.
    pub fn render_ascii(&self) -> String {
        let height = self.steps.iter().filter(|s| **s == Step::North).count();
        let width = 2 * self.steps.iter().filter(|s| **s == Step::East).count() + 2;
        let mut grid = vec![vec![' '; width.max(2 * height + 1)]; height];
        for y in 0..height {
            grid[y][2 * y] = '.';
        }
        let (mut x, mut y) = (0usize, 0usize);
        for s in &self.steps {
            match s {
                Step::East => {
                    if y < height {
                        grid[y][2 * x + 1] = '_';
                    }
                    x += 1;
                }
                Step::North => {
                    grid[y][2 * x] = '|';
                    y += 1;
                }
            }
        }
        grid.iter().rev().map(|row| row.iter().collect::<String>().trim_end().to_string()).collect::<Vec<_>>().join("\n")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<&str> = self.steps.iter().map(|s| if *s == Step::East { "E" } else { "N" }).collect();
        f.write_str(&letters.join(" "))
    }
}

pub fn path_of(nu: &ExponentVector) -> LatticePath {
    let mut steps = Vec::with_capacity(nu.degree() as usize + nu.len());
    for &e in nu.entries() {
        steps.extend(std::iter::repeat_n(Step::East, e as usize));
        steps.push(Step::North);
    }
    LatticePath { steps }
}

pub fn is_dyck(nu: &ExponentVector) -> bool {
    let mut partial = 0u64;
    nu.entries().iter().enumerate().all(|(i, &e)| {
        partial += e as u64;
        partial <= i as u64
    })
}

pub fn is_transdiagonal(nu: &ExponentVector) -> bool {
    !is_dyck(nu)
}

/// `Cₙ = C(2n, n) / (n + 1)`, saturating.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        // C_{k+1} = C_k · 2(2k+1) / (k+2)
        match c.checked_mul(2 * (2 * k + 1)) {
            Some(x) => c = x / (k + 2),
            None => return u128::MAX,
        }
    }
    c
}

/// All Dyck vectors of length `n`, lex-ascending.
pub fn enumerate_dyck(n: usize, cap: u128) -> Result<Vec<ExponentVector>> {
    let count = catalan(n);
    if count > cap {
        return Err(Error::CapExceeded { what: "Dyck vectors", needed: count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = vec![0u32; n];
    dyck_rec(&mut cur, 0, 0, &mut out);
    Ok(out)
}

fn dyck_rec(cur: &mut Vec<u32>, pos: usize, sum: u32, out: &mut Vec<ExponentVector>) {
    if pos == cur.len() {
        out.push(ExponentVector::from(cur.as_slice()));
        return;
    }
    for e in 0..=(pos as u32 - sum) {
        cur[pos] = e;
        dyck_rec(cur, pos + 1, sum + e, out);
    }
    cur[pos] = 0;
}

/// All length-`n` vectors of total degree at most `max_deg`, lex-ascending.
pub fn vectors_up_to_degree(n: usize, max_deg: u32) -> Vec<ExponentVector> {
    let mut out: Vec<ExponentVector> =
        (0..=max_deg).flat_map(|k| crate::poly::monomials_of_degree(n, k)).collect();
    out.sort();
    out
}

/// Transdiagonal vectors of degree at most `max_deg` that are minimal for the
/// entrywise order, lex-ascending. Transdiagonal vectors form an up-set, so it
/// suffices that lowering any single positive entry gives a Dyck vector.
pub fn minimal_transdiagonal(n: usize, max_deg: u32) -> Vec<ExponentVector> {
    vectors_up_to_degree(n, max_deg)
        .into_iter()
        .filter(is_transdiagonal)
        .filter(|nu| {
            (0..n).filter(|&i| nu.entries()[i] > 0).all(|i| {
                let mut lower = nu.clone();
                lower.entries_mut()[i] -= 1;
                is_dyck(&lower)
            })
        })
        .collect()
}

/// `{mη + α : η Dyck, α ∈ [0,m)ⁿ}`, lex-ascending.
pub fn basis_monomials(n: usize, m: u32, cap: u128) -> Result<Vec<ExponentVector>> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    let count = (m as u128).checked_pow(n as u32).and_then(|p| p.checked_mul(catalan(n))).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::CapExceeded { what: "basis monomials", needed: count, cap });
    }
    let offsets = vectors_in_box(n, m);
    let mut out = Vec::with_capacity(count as usize);
    for eta in enumerate_dyck(n, cap)? {
        let base = eta.scaled(m);
        out.extend(offsets.iter().map(|a| base.add(a)));
    }
    out.sort();
    Ok(out)
}

fn vectors_in_box(n: usize, m: u32) -> Vec<ExponentVector> {
    let mut out = vec![ExponentVector::zeros(n)];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |a| {
                    let mut w = v.clone();
                    w.entries_mut()[i] = a;
                    w
                })
            })
            .collect();
    }
    out
}

/// Finitely supported series `Σ coeffs[k] t^k` with natural coefficients.
/// Trailing zeros are trimmed, so equality is equality of series.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertSeries(Vec<u64>);

impl HilbertSeries {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertSeries(coeffs)
    }

    pub fn one() -> Self {
        HilbertSeries(vec![1])
    }

    /// `1 + t + … + t^{m-1} = (1 - t^m)/(1 - t)`.
    pub fn geometric(m: u32) -> Self {
        Self::new(vec![1; m as usize])
    }

    /// Degree counts of a set of exponent vectors.
    pub fn from_degrees(vectors: &[ExponentVector]) -> Self {
        let mut coeffs = Vec::new();
        for v in vectors {
            let d = v.degree() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Value at `t = 1`.
    pub fn total(&self) -> u128 {
        self.0.iter().map(|&c| c as u128).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Self::default();
        }
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `t ↦ t^m`.
    pub fn substitute_power(&self, m: u32) -> Self {
        let mut out = vec![0u64; (self.0.len().max(1) - 1) * m as usize + 1];
        for (k, &c) in self.0.iter().enumerate() {
            out[k * m as usize] = c;
        }
        Self::new(out)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    (1..=k as u128).fold(1u128, |acc, i| acc * (n as u128 - k as u128 + i) / i)
}

/// `F_n(t) = Σ_{k<n} (n-k)/(n+k) · C(n+k, k) · t^k`; `F_0 = 1`.
pub fn closed_form_f(n: usize) -> HilbertSeries {
    if n == 0 {
        return HilbertSeries::one();
    }
    let n = n as u64;
    let coeffs = (0..n)
        .map(|k| {
            let num = binomial(n + k, k) * (n - k) as u128;
            debug_assert_eq!(num % (n + k) as u128, 0);
            (num / (n + k) as u128) as u64
        })
        .collect();
    HilbertSeries::new(coeffs)
}

/// Degree counts of [`basis_monomials`].
pub fn hilbert_from_basis(n: usize, m: u32, cap: u128) -> Result<HilbertSeries> {
    Ok(HilbertSeries::from_degrees(&basis_monomials(n, m, cap)?))
}

/// `((1 - t^m)/(1 - t))ⁿ · F_n(t^m)`.
pub fn product_form(n: usize, m: u32) -> HilbertSeries {
    HilbertSeries::geometric(m).pow(n as u32).mul(&closed_form_f(n).substitute_power(m))
}

/// `(1 - t^m)/(1 - t) · F_n(t^m)`, the single-power variant. It totals `m·Cₙ`
/// rather than `mⁿ·Cₙ` and disagrees with the basis count once `n, m ≥ 2`.
pub fn single_power_form(n: usize, m: u32) -> HilbertSeries {
    HilbertSeries::geometric(m).mul(&closed_form_f(n).substitute_power(m))
}

//! The classical and the quasi-symmetrizing actions of `G(n,m)` on polynomials.
//!
//! Classical: `g.P(X) = P(X·ᵗg)`, i.e. substitute `ζ^{c_i} x_{σ(i)}` for `x_i`.
//!
//! Quasi-symmetrizing, on a monomial `A^K` with support `A = (x_{i_1} < … < x_{i_l})`
//! and positive exponents `K`: move the support through `|g|`, re-sort it
//! increasingly, put `K` back on positionally and multiply by `w(g)^{c(K)}`,
//! where `c(K) = 0` iff every `k_j` is divisible by `m`.
//!
//! With `compose` realising the matrix product, both satisfy
//! `g·(h·P) = (h∘g)·P` where `h∘g = h.compose(g)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{root_of_unity, Coefficient, Rational};
use crate::error::{Error, Result};
use crate::group::{enumerate_group, group_order, ColoredPermutation};
use crate::poly::{CyclotomicPolynomial, ExponentVector, MvPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Classical,
    Quasi,
}

impl std::str::FromStr for ActionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(ActionKind::Classical),
            "quasi" => Ok(ActionKind::Quasi),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown action {s:?}") }),
        }
    }
}

/// `c(K)`: 0 when every exponent is a multiple of `m` (vacuously for `K = ()`), else 1.
pub fn c_of_k(k: &[u32], m: u32) -> u32 {
    u32::from(k.iter().any(|&e| e % m != 0))
}

fn check(g: &ColoredPermutation, p: &CyclotomicPolynomial) -> Result<()> {
    if p.nvars() != g.n() {
        return Err(Error::VariableMismatch(g.n(), p.nvars()));
    }
    if p.order() != g.m() {
        return Err(Error::OrderMismatch(g.m(), p.order()));
    }
    Ok(())
}

/// Image of a single monomial under the quasi action, with the power of `w(g)` applied.
pub fn quasi_act_monomial(g: &ColoredPermutation, nu: &ExponentVector) -> (ExponentVector, u32) {
    let (support, k): (Vec<usize>, Vec<u32>) =
        nu.entries().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).unzip();
    let mut image: Vec<usize> = support.iter().map(|&i| g.sigma()[i]).collect();
    image.sort_unstable();
    let mut out = ExponentVector::zeros(nu.len());
    for (&pos, &e) in image.iter().zip(&k) {
        out.entries_mut()[pos] = e;
    }
    (out, c_of_k(&k, g.m()) * g.weight_exponent())
}

pub fn quasi_act(g: &ColoredPermutation, p: &CyclotomicPolynomial) -> Result<CyclotomicPolynomial> {
    check(g, p)?;
    let terms = p.terms().map(|(nu, c)| {
        let (image, zeta_power) = quasi_act_monomial(g, nu);
        (image, c.times(&root_of_unity(g.m(), zeta_power as i64).expect("m > 0")))
    });
    Ok(MvPolynomial::from_terms(p.nvars(), p.domain().clone(), terms.collect::<Vec<_>>()))
}

/// Image of `X^ν` under `x_i ↦ ζ^{c_i} x_{σ(i)}`.
pub fn classical_act_monomial(g: &ColoredPermutation, nu: &ExponentVector) -> (ExponentVector, u32) {
    let mut out = ExponentVector::zeros(nu.len());
    let mut zeta_power = 0u64;
    for (i, &e) in nu.entries().iter().enumerate() {
        out.entries_mut()[g.sigma()[i]] = e;
        zeta_power += g.colors()[i] as u64 * e as u64;
    }
    (out, (zeta_power % g.m() as u64) as u32)
}

pub fn classical_act(g: &ColoredPermutation, p: &CyclotomicPolynomial) -> Result<CyclotomicPolynomial> {
    check(g, p)?;
    let terms = p.terms().map(|(nu, c)| {
        let (image, zeta_power) = classical_act_monomial(g, nu);
        (image, c.times(&root_of_unity(g.m(), zeta_power as i64).expect("m > 0")))
    });
    Ok(MvPolynomial::from_terms(p.nvars(), p.domain().clone(), terms.collect::<Vec<_>>()))
}

pub fn act(kind: ActionKind, g: &ColoredPermutation, p: &CyclotomicPolynomial) -> Result<CyclotomicPolynomial> {
    match kind {
        ActionKind::Classical => classical_act(g, p),
        ActionKind::Quasi => quasi_act(g, p),
    }
}

fn check_params(n: usize, m: u32, p: &CyclotomicPolynomial) -> Result<()> {
    check(&ColoredPermutation::identity(n, m), p)
}

/// Reynolds operator `|G|⁻¹ Σ_g g·P`.
pub fn average(n: usize, m: u32, kind: ActionKind, p: &CyclotomicPolynomial, cap: u128) -> Result<CyclotomicPolynomial> {
    check_params(n, m, p)?;
    let group = enumerate_group(n, m, cap)?;
    let sum = group
        .par_iter()
        .map(|g| act(kind, g, p).expect("parameters checked"))
        .reduce(|| MvPolynomial::zero(n, p.domain().clone()), |a, b| &a + &b);
    let order = Rational::from_integer(group_order(n, m).into());
    Ok(sum.scale_rational(&order.recip()))
}

/// Invariance under the generating set of adjacent transpositions and the
/// color twist at position 1; equivalent to [`is_invariant_full`].
pub fn is_invariant(n: usize, m: u32, kind: ActionKind, p: &CyclotomicPolynomial) -> Result<bool> {
    check_params(n, m, p)?;
    for g in ColoredPermutation::generators(n, m) {
        if act(kind, &g, p)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Invariance checked against every element of the group.
pub fn is_invariant_full(n: usize, m: u32, kind: ActionKind, p: &CyclotomicPolynomial, cap: u128) -> Result<bool> {
    check_params(n, m, p)?;
    let group = enumerate_group(n, m, cap)?;
    Ok(group.par_iter().all(|g| act(kind, g, p).expect("parameters checked") == *p))
}

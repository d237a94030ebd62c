//! Compositions, monomial quasi-symmetric polynomials and the quasi-invariant
//! generators `M_α(X^m)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, MvPolynomial, RationalPolynomial};

/// Ordered list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse { pos: 0, msg: "composition parts must be positive".into() });
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(Error::Parse { pos: 0, msg: format!("expected (a,b,...), got {s:?}") })?;
        if inner.trim().is_empty() {
            return Ok(Composition::default());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad part {p:?}") }))
            .collect::<Result<Vec<u32>>>()?;
        Composition::new(parts)
    }
}

/// Drops the zero entries of `ν`.
pub fn composition_of(nu: &ExponentVector) -> Composition {
    Composition(nu.entries().iter().copied().filter(|&e| e > 0).collect())
}

/// Compositions of `d` with at most `max_parts` parts, ordered by number of
/// parts and then lexicographically.
pub fn compositions(d: u32, max_parts: usize) -> Vec<Composition> {
    if d == 0 {
        return vec![Composition::default()];
    }
    let mut out = Vec::new();
    for k in 1..=max_parts.min(d as usize) {
        let mut cur = Vec::with_capacity(k);
        extend_compositions(d, k, &mut cur, &mut out);
    }
    out
}

fn extend_compositions(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if parts == 1 {
        cur.push(left);
        out.push(Composition(cur.clone()));
        cur.pop();
        return;
    }
    for first in 1..=left - (parts as u32 - 1) {
        cur.push(first);
        extend_compositions(left - first, parts - 1, cur, out);
        cur.pop();
    }
}

/// Exponent vectors of length `n` whose composition is `alpha`, one per choice of
/// increasing positions.
pub fn composition_class(alpha: &Composition, n: usize) -> Result<Vec<ExponentVector>> {
    if alpha.len() > n {
        return Err(Error::TooManyParts { parts: alpha.len(), nvars: n });
    }
    Ok((0..n)
        .combinations(alpha.len())
        .map(|positions| {
            let mut e = ExponentVector::zeros(n);
            for (&p, &a) in positions.iter().zip(alpha.parts()) {
                e.entries_mut()[p] = a;
            }
            e
        })
        .collect())
}

/// `M_α(x_1..x_n) = Σ_{i_1<…<i_k} x_{i_1}^{α_1} ⋯ x_{i_k}^{α_k}`.
pub fn monomial_qsym(alpha: &Composition, n: usize) -> Result<RationalPolynomial> {
    let class = composition_class(alpha, n)?;
    Ok(MvPolynomial::from_terms(n, (), class.into_iter().map(|e| (e, <Rational as One>::one()))))
}

/// Coefficients are constant on every composition class, absent monomials counting as 0.
pub fn is_quasi_symmetric<C: Coefficient>(p: &MvPolynomial<C>) -> bool {
    let n = p.nvars();
    let classes: BTreeSet<Composition> = p.terms().map(|(e, _)| composition_of(e)).collect();
    classes.iter().all(|alpha| {
        let class = composition_class(alpha, n).expect("class built from a length-n vector");
        let first = p.coeff(&class[0]);
        class[1..].iter().all(|e| p.coeff(e) == first)
    })
}

/// `Q` with `Q(X^m) = P`, when every exponent of `P` is a multiple of `m`.
pub fn desubstitute<C: Coefficient>(p: &MvPolynomial<C>, m: u32) -> Option<MvPolynomial<C>> {
    if p.terms().any(|(e, _)| e.entries().iter().any(|&k| k % m != 0)) {
        return None;
    }
    let terms = p.terms().map(|(e, c)| (ExponentVector::new(e.entries().iter().map(|&k| k / m)), c.clone()));
    Some(MvPolynomial::from_terms(p.nvars(), p.domain().clone(), terms.collect::<Vec<_>>()))
}

/// `P ∈ QInv_{n,m}` iff `P(X) = Q(X^m)` for a quasi-symmetric `Q`.
pub fn is_quasi_invariant<C: Coefficient>(p: &MvPolynomial<C>, m: u32) -> bool {
    desubstitute(p, m).is_some_and(|q| is_quasi_symmetric(&q))
}

/// `{M_α(X^m) : 1 ≤ m|α| ≤ max_deg, ℓ(α) ≤ n}`, by increasing degree.
pub fn qinv_generators(n: usize, m: u32, max_deg: u32) -> Vec<RationalPolynomial> {
    (1..=max_deg / m)
        .flat_map(|d| compositions(d, n))
        .map(|alpha| monomial_qsym(&alpha, n).expect("at most n parts").substitute_power(m))
        .collect()
}

/// `e_k(x_1..x_n)`.
pub fn elementary_symmetric(k: usize, n: usize) -> Result<RationalPolynomial> {
    if k > n {
        return Err(Error::DegreeTooLarge { k, n });
    }
    let ones = Composition(vec![1; k]);
    monomial_qsym(&ones, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rational;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn composition_of_examples() {
        assert_eq!(composition_of(&ExponentVector::from(vec![2, 1, 0, 3, 0, 1])), comp(&[2, 1, 3, 1]));
        assert_eq!(composition_of(&ExponentVector::zeros(3)), Composition::default());
        assert_eq!(composition_of(&ExponentVector::from(vec![5])), comp(&[5]));
    }

    #[test]
    fn enumerate_compositions() {
        assert_eq!(compositions(3, 2), vec![comp(&[3]), comp(&[1, 2]), comp(&[2, 1])]);
        assert_eq!(compositions(0, 3), vec![Composition::default()]);
        assert_eq!(compositions(4, 4).len(), 8);
        for d in 1..8u32 {
            assert_eq!(compositions(d, d as usize).len(), 1 << (d - 1));
        }
    }

    #[test]
    fn composition_text() {
        assert_eq!("(2,1,3)".parse::<Composition>().unwrap(), comp(&[2, 1, 3]));
        assert_eq!(comp(&[2, 1, 3]).to_string(), "(2,1,3)");
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::default());
        assert!("(2,0)".parse::<Composition>().is_err());
    }

    #[test]
    fn monomial_qsym_examples() {
        assert_eq!(monomial_qsym(&comp(&[2, 1]), 3).unwrap(), parse_rational("x1^2*x2 + x1^2*x3 + x2^2*x3", Some(3)).unwrap());
        assert_eq!(monomial_qsym(&comp(&[1]), 2).unwrap(), parse_rational("x1 + x2", Some(2)).unwrap());
        assert_eq!(monomial_qsym(&Composition::default(), 4).unwrap(), parse_rational("1", Some(4)).unwrap());
        assert!(matches!(monomial_qsym(&comp(&[1, 1, 1]), 2), Err(Error::TooManyParts { parts: 3, nvars: 2 })));
    }

    #[test]
    fn quasi_symmetry() {
        assert!(is_quasi_symmetric(&monomial_qsym(&comp(&[2, 1]), 3).unwrap()));
        assert!(!is_quasi_symmetric(&parse_rational("x1^2*x2 + x2^2*x3", Some(3)).unwrap()));
        let sym = parse_rational("x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 + 5*x1*x2*x3", Some(3)).unwrap();
        assert!(is_quasi_symmetric(&sym));
    }

    #[test]
    fn quasi_invariance() {
        assert!(is_quasi_invariant(&parse_rational("x1^2 + x2^2", Some(2)).unwrap(), 2));
        assert!(!is_quasi_invariant(&parse_rational("x1 + x2", Some(2)).unwrap(), 2));
        assert!(is_quasi_invariant(&parse_rational("7", Some(2)).unwrap(), 3));
    }

    #[test]
    fn generator_sets() {
        let g = qinv_generators(2, 1, 2);
        let expected: Vec<_> = ["x1 + x2", "x1^2 + x2^2", "x1*x2"].iter().map(|s| parse_rational(s, Some(2)).unwrap()).collect();
        assert_eq!(g, expected);
        let g = qinv_generators(1, 2, 4);
        assert_eq!(g, vec![parse_rational("x1^2", Some(1)).unwrap(), parse_rational("x1^4", Some(1)).unwrap()]);
        assert!(qinv_generators(2, 3, 2).is_empty());
    }

    #[test]
    fn elementary() {
        assert_eq!(elementary_symmetric(2, 2).unwrap(), parse_rational("x1*x2", Some(2)).unwrap());
        assert_eq!(elementary_symmetric(0, 3).unwrap(), parse_rational("1", Some(3)).unwrap());
        assert_eq!(elementary_symmetric(2, 4).unwrap().num_terms(), 6);
        assert_eq!(elementary_symmetric(3, 2), Err(Error::DegreeTooLarge { k: 3, n: 2 }));
    }
}

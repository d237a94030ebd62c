use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::ExponentVector;
use crate::arith::{Coefficient, CyclotomicField, CyclotomicNumber, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial in `nvars` variables over the coefficient ring `C`.
///
/// Terms are kept in a map ordered by lex; iteration through [`terms`](Self::terms)
/// is lex-descending. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MvPolynomial<C: Coefficient> {
    nvars: usize,
    domain: C::Domain,
    terms: BTreeMap<ExponentVector, C>,
}

pub type RationalPolynomial = MvPolynomial<Rational>;
pub type CyclotomicPolynomial = MvPolynomial<CyclotomicNumber>;

impl<C: Coefficient> MvPolynomial<C> {
    pub fn zero(nvars: usize, domain: C::Domain) -> Self {
        MvPolynomial { nvars, domain, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, domain: C::Domain, c: C) -> Self {
        Self::monomial(nvars, domain, ExponentVector::zeros(nvars), c)
    }

    pub fn one(nvars: usize, domain: C::Domain) -> Self {
        let c = C::one(&domain);
        Self::constant(nvars, domain, c)
    }

    pub fn monomial(nvars: usize, domain: C::Domain, exps: ExponentVector, c: C) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length must equal nvars");
        let mut p = Self::zero(nvars, domain);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn variable(nvars: usize, domain: C::Domain, i: usize) -> Self {
        let one = C::one(&domain);
        Self::monomial(nvars, domain, ExponentVector::unit(nvars, i), one)
    }

    /// Sums the given terms; repeated exponents are combined.
    pub fn from_terms(
        nvars: usize,
        domain: C::Domain,
        terms: impl IntoIterator<Item = (ExponentVector, C)>,
    ) -> Self {
        let mut p = Self::zero(nvars, domain);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length must equal nvars");
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> &C::Domain {
        &self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lex-descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: &ExponentVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(|| C::zero(&self.domain))
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.terms.contains_key(e)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get().plus(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Lex-greatest term.
    pub fn leading_term(&self) -> Result<(&ExponentVector, &C)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&ExponentVector> {
        self.leading_term().map(|(e, _)| e)
    }

    pub fn leading_coefficient(&self) -> Result<&C> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(ExponentVector, C)> {
        self.terms.pop_last()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.keys().all(|e| e.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &c.negated());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars, self.domain.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.add(b), &ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(e, x)| (e.clone(), x.times(c))).filter(|(_, x)| !x.is_zero()).collect()
        };
        MvPolynomial { nvars: self.nvars, domain: self.domain.clone(), terms }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(&self.domain, r))
    }

    /// `c · X^shift · self`.
    pub fn mul_term(&self, shift: &ExponentVector, c: &C) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(e, x)| (e.add(shift), x.times(c))).collect()
        };
        MvPolynomial { nvars: self.nvars, domain: self.domain.clone(), terms }
    }

    /// `self(x_1^m, …, x_n^m)`.
    pub fn substitute_power(&self, m: u32) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.scaled(m), c.clone())).collect();
        MvPolynomial { nvars: self.nvars, domain: self.domain.clone(), terms }
    }

    pub fn map_coefficients<D: Coefficient>(&self, domain: D::Domain, f: impl Fn(&C) -> D) -> MvPolynomial<D> {
        MvPolynomial::from_terms(self.nvars, domain, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// `⟨P, Q⟩ = P(∂X) Q(X) |_{X=0}`, evaluated term-by-term:
    /// `⟨X^ν, X^μ⟩ = δ_{νμ} · Π ν_i!`.
    pub fn diff_pairing(&self, other: &Self) -> Result<C> {
        self.check(other)?;
        let mut acc = C::zero(&self.domain);
        for (e, a) in &self.terms {
            if let Some(b) = other.terms.get(e) {
                let w = Rational::from_integer(factorial_product(e));
                acc = acc.plus(&a.times(b).scaled(&w));
            }
        }
        Ok(acc)
    }

    /// `self(∂X)` applied to `target`.
    pub fn apply_differential(&self, target: &Self) -> Result<Self> {
        self.check(target)?;
        let mut out = Self::zero(self.nvars, self.domain.clone());
        for (nu, q) in &self.terms {
            for (mu, p) in &target.terms {
                if let Some(rest) = mu.checked_sub(nu) {
                    let w = Rational::from_integer(falling_product(mu, nu));
                    out.add_term(rest, &q.times(p).scaled(&w));
                }
            }
        }
        Ok(out)
    }
}

impl MvPolynomial<Rational> {
    pub fn rational_zero(nvars: usize) -> Self {
        Self::zero(nvars, ())
    }

    pub fn to_cyclotomic(&self, m: u32) -> Result<MvPolynomial<CyclotomicNumber>> {
        let field = CyclotomicField::get(m)?;
        Ok(self.map_coefficients(field.clone(), |c| CyclotomicNumber::from_rational_in(field.clone(), c.clone())))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading_coefficient()?;
        if One::is_one(lc) {
            return Ok(self.clone());
        }
        Ok(self.scale(&lc.recip()))
    }
}

impl MvPolynomial<CyclotomicNumber> {
    pub fn order(&self) -> u32 {
        self.domain.order()
    }
}

/// `Π ν_i!`
pub fn factorial_product(nu: &ExponentVector) -> BigInt {
    nu.entries().iter().fold(BigInt::one(), |acc, &k| acc * (1..=k).fold(BigInt::one(), |f, i| f * i))
}

/// `Π μ_i! / (μ_i - ν_i)!`, the scalar in `∂^ν X^μ`.
fn falling_product(mu: &ExponentVector, nu: &ExponentVector) -> BigInt {
    mu.entries().iter().zip(nu.entries()).fold(BigInt::one(), |acc, (&m, &n)| {
        (m - n + 1..=m).fold(acc, |f, i| f * i)
    })
}

impl<C: Coefficient> Add for &MvPolynomial<C> {
    type Output = MvPolynomial<C>;
    fn add(self, rhs: Self) -> MvPolynomial<C> {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<C: Coefficient> Sub for &MvPolynomial<C> {
    type Output = MvPolynomial<C>;
    fn sub(self, rhs: Self) -> MvPolynomial<C> {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<C: Coefficient> Mul for &MvPolynomial<C> {
    type Output = MvPolynomial<C>;
    fn mul(self, rhs: Self) -> MvPolynomial<C> {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<C: Coefficient> Neg for &MvPolynomial<C> {
    type Output = MvPolynomial<C>;
    fn neg(self) -> MvPolynomial<C> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.negated())).collect();
        MvPolynomial { nvars: self.nvars, domain: self.domain.clone(), terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, root_of_unity};
    use crate::poly::parse_rational;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> RationalPolynomial {
        parse_rational(s, Some(n)).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&p("x1+x2", 2) * &p("x1-x2", 2), p("x1^2-x2^2", 2));
        let q = p("3*x1*x2 - x2^3 + 1/2", 2);
        assert!(q.checked_add(&q.scale_rational(&rational(-1, 1))).unwrap().is_zero());
        let s = p("x1+x2", 2);
        assert_eq!(&s * &s, p("x1^2 + 2*x1*x2 + x2^2", 2));
    }

    #[test]
    fn mismatches_rejected() {
        let a = p("x1", 2);
        let b = p("x1", 3);
        assert_eq!(a.checked_add(&b), Err(Error::VariableMismatch(2, 3)));
        let c3 = a.to_cyclotomic(3).unwrap();
        let c4 = a.to_cyclotomic(4).unwrap();
        assert_eq!(c3.checked_mul(&c4), Err(Error::DomainMismatch));
    }

    #[test]
    fn leading_terms() {
        assert_eq!(p("x2^2 + x1", 2).leading_monomial().unwrap(), &ev(&[1, 0]));
        let (e, c) = p("5*x1^3", 2).leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        assert_eq!((e, c), (ev(&[3, 0]), rational(5, 1)));
        assert_eq!(p("x1*x2", 2).leading_monomial().unwrap(), &ev(&[1, 1]));
        assert_eq!(p("0", 2).leading_term().err(), Some(Error::ZeroPolynomial));
    }

    #[test]
    fn power_substitution() {
        assert_eq!(p("x1+x2", 2).substitute_power(3), p("x1^3+x2^3", 2));
        let q = p("x1^2*x2 - 7*x2 + 2", 2);
        assert_eq!(q.substitute_power(1), q);
        assert_eq!(p("x1^2*x2", 2).substitute_power(2), p("x1^4*x2^2", 2));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(p("x1", 2).diff_pairing(&p("x2", 2)).unwrap(), rational(0, 1));
        assert_eq!(p("x1^2", 2).diff_pairing(&p("x1^2", 2)).unwrap(), rational(2, 1));
        assert_eq!(p("x1*x2", 2).diff_pairing(&p("x1*x2 + x1^2", 2)).unwrap(), rational(1, 1));
    }

    #[test]
    fn differential_operator() {
        // ∂1² (x1³ x2) = 6 x1 x2
        let d = p("x1^2", 2).apply_differential(&p("x1^3*x2", 2)).unwrap();
        assert_eq!(d, p("6*x1*x2", 2));
        assert!(p("x2", 2).apply_differential(&p("x1^5", 2)).unwrap().is_zero());
    }

    #[test]
    fn cyclotomic_coefficients() {
        let x = p("x1", 1).to_cyclotomic(2).unwrap();
        let z = root_of_unity(2, 1).unwrap();
        let y = x.scale(&z);
        assert!((&x + &y).is_zero());
    }

    fn small_poly(n: usize, max_deg: u32) -> impl Strategy<Value = RationalPolynomial> {
        prop::collection::vec((prop::collection::vec(0..=max_deg, n), -4i64..=4), 0..5).prop_map(move |ts| {
            RationalPolynomial::from_terms(n, (), ts.into_iter().map(|(e, c)| (ExponentVector::from(e), rational(c, 1))))
        })
    }

    fn homogeneous(n: usize, d: u32) -> impl Strategy<Value = RationalPolynomial> {
        let slice = crate::poly::monomials_of_degree(n, d);
        prop::collection::vec((0..slice.len(), -4i64..=4), 1..4).prop_map(move |ts| {
            RationalPolynomial::from_terms(n, (), ts.into_iter().map(|(i, c)| (slice[i].clone(), rational(c, 1))))
        })
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_map(a in small_poly(3, 3), b in small_poly(3, 3), m in 1u32..=3) {
            prop_assert_eq!((&a * &b).substitute_power(m), &a.substitute_power(m) * &b.substitute_power(m));
            prop_assert_eq!((&a + &b).substitute_power(m), &a.substitute_power(m) + &b.substitute_power(m));
        }

        #[test]
        fn pairing_symmetric_and_positive(a in homogeneous(3, 3), b in homogeneous(3, 3)) {
            prop_assert_eq!(a.diff_pairing(&b).unwrap(), b.diff_pairing(&a).unwrap());
            let aa = a.diff_pairing(&a).unwrap();
            if a.is_zero() {
                prop_assert_eq!(aa, rational(0, 1));
            } else {
                prop_assert!(aa > rational(0, 1));
            }
            // the pairing is the constant term of a(∂)b
            prop_assert_eq!(a.apply_differential(&b).unwrap().coeff(&ExponentVector::zeros(3)), a.diff_pairing(&b).unwrap());
        }

        #[test]
        fn degree_is_additive(a in homogeneous(3, 2), b in homogeneous(3, 3)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.homogeneous_degree(), Some(5));
        }
    }
}

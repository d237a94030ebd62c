use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coefficient, Rational};
use crate::error::{Error, Result};

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
///
/// Computed by dividing `z^m - 1` by `Φ_d` for every proper divisor `d` of `m`.
pub fn cyclotomic_polynomial(m: u32) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut quotient = vec![BigInt::zero(); m as usize + 1];
    quotient[0] = BigInt::from(-1);
    quotient[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let divisor = cyclotomic_polynomial(d)?;
        quotient = exact_monic_division(&quotient, &divisor);
    }
    Ok(quotient)
}

fn exact_monic_division(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let dd = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let qlen = dividend.len() - dd;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in divisor.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    q
}

/// The field `Q(ζ_m) = Q[z]/Φ_m(z)`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    /// Shared handle to the field of order `m`; fields are built once per order.
    pub fn get(m: u32) -> Result<Arc<CyclotomicField>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&m) {
            return Ok(f.clone());
        }
        let field = Arc::new(CyclotomicField { order: m, modulus: cyclotomic_polynomial(m)? });
        Ok(cache.lock().unwrap().entry(m).or_insert(field).clone())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `deg Φ_m`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        for k in (d..v.len()).rev() {
            let c = std::mem::replace(&mut v[k], <Rational as Zero>::zero());
            if Zero::is_zero(&c) {
                continue;
            }
            for (j, mj) in self.modulus[..d].iter().enumerate() {
                if !mj.is_zero() {
                    v[k - d + j] -= &c * mj;
                }
            }
        }
        v.resize(d, <Rational as Zero>::zero());
        v
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

/// Element of `Q(ζ_m)`, stored as its residue modulo `Φ_m` in the power basis
/// `1, ζ, …, ζ^{d-1}`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

/// `ζ_m^{k mod m}`.
pub fn root_of_unity(m: u32, k: i64) -> Result<CyclotomicNumber> {
    let field = CyclotomicField::get(m)?;
    let e = k.rem_euclid(m as i64) as usize;
    let mut v = vec![<Rational as Zero>::zero(); e + 1];
    v[e] = <Rational as One>::one();
    Ok(CyclotomicNumber::from_residue(field, v))
}

impl CyclotomicNumber {
    /// Builds a number from an arbitrary-length polynomial in `z`, reducing mod `Φ_m`.
    pub fn from_residue(field: Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        let coeffs = field.reduce(coeffs);
        CyclotomicNumber { field, coeffs }
    }

    pub fn from_rational_in(field: Arc<CyclotomicField>, r: Rational) -> Self {
        Self::from_residue(field, vec![r])
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::OrderMismatch(self.field.order, other.field.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicNumber { field: self.field.clone(), coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicNumber { field: self.field.clone(), coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.coeffs.len();
        let mut prod = vec![<Rational as Zero>::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !Zero::is_zero(*a)) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !Zero::is_zero(*b)) {
                prod[i + j] += a * b;
            }
        }
        Ok(Self::from_residue(self.field.clone(), prod))
    }

    /// Equality in `Q(ζ_m)`; errors on mismatched orders instead of answering `false`.
    pub fn checked_eq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_rational_in(self.field.clone(), <Rational as One>::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    /// Writes the number as `c·ζ^k` with the smallest such `k`, when possible.
    pub fn as_scaled_root(&self) -> Option<(Rational, u32)> {
        let m = self.field.order;
        (0..m).find_map(|k| {
            let back = self.times(&root_of_unity(m, -(k as i64)).expect("order is positive"));
            back.as_rational().map(|c| (c, k))
        })
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Q(z_{})", self, self.field.order)
    }
}

fn z_power(k: u32) -> String {
    match k {
        0 => "1".to_string(),
        1 => "z".to_string(),
        _ => format!("z^{k}"),
    }
}

fn scaled_power(c: &Rational, k: u32) -> String {
    if k == 0 {
        return c.to_string();
    }
    if One::is_one(c) {
        z_power(k)
    } else if One::is_one(&-c) {
        format!("-{}", z_power(k))
    } else {
        format!("{}*{}", c, z_power(k))
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((c, k)) = self.as_scaled_root() {
            return f.write_str(&scaled_power(&c, k));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !Zero::is_zero(*c)) {
            if first {
                f.write_str(&scaled_power(c, k as u32))?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", scaled_power(&-c, k as u32))?;
            } else {
                write!(f, " + {}", scaled_power(c, k as u32))?;
            }
        }
        Ok(())
    }
}

impl Coefficient for CyclotomicNumber {
    type Domain = Arc<CyclotomicField>;

    fn domain(&self) -> Self::Domain {
        self.field.clone()
    }

    fn zero(domain: &Self::Domain) -> Self {
        CyclotomicNumber { field: domain.clone(), coeffs: vec![<Rational as Zero>::zero(); domain.degree()] }
    }

    fn one(domain: &Self::Domain) -> Self {
        Self::from_rational_in(domain.clone(), <Rational as One>::one())
    }

    fn from_rational(domain: &Self::Domain, r: &Rational) -> Self {
        Self::from_rational_in(domain.clone(), r.clone())
    }

    fn generator(domain: &Self::Domain) -> Option<Self> {
        Some(root_of_unity(domain.order, 1).expect("order is positive"))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("cyclotomic order mismatch")
    }

    fn minus(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("cyclotomic order mismatch")
    }

    fn times(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("cyclotomic order mismatch")
    }

    fn negated(&self) -> Self {
        CyclotomicNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn scaled(&self, r: &Rational) -> Self {
        CyclotomicNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

/// Integer-polynomial product, used to check `Π_{d|m} Φ_d = z^m - 1`.
#[cfg(test)]
fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

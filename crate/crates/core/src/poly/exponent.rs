use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector `(ν_1, …, ν_n)` of the monomial `x_1^{ν_1} ⋯ x_n^{ν_n}`.
///
/// The derived `Ord` is the lexicographic order with `x_1 > x_2 > … > x_n`:
/// `ν > μ` iff the first nonzero entry of `ν - μ` is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(SmallVec<[u32; 8]>);

impl ExponentVector {
    pub fn new(entries: impl IntoIterator<Item = u32>) -> Self {
        ExponentVector(entries.into_iter().collect())
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn entries_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `X^self` divides `X^other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self - other` when it stays in ℕⁿ.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if other.divides(self) {
            Some(ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn scaled(&self, m: u32) -> Self {
        ExponentVector(self.0.iter().map(|a| a * m).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v.into())
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        ExponentVector(v.into())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub fn lex_compare(nu: &ExponentVector, mu: &ExponentVector) -> Result<Ordering> {
    if nu.len() != mu.len() {
        return Err(Error::LengthMismatch(nu.len(), mu.len()));
    }
    Ok(nu.cmp(mu))
}

/// All exponent vectors of length `n` and total degree `k`, lex-descending
/// (so `x_1^k` comes first).
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(ExponentVector::zeros(0));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    fill_descending(&mut cur, 0, k, &mut out);
    out
}

fn fill_descending(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<ExponentVector>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(ExponentVector::from(cur.as_slice()));
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill_descending(cur, pos + 1, left - e, out);
    }
}

/// Number of monomials of degree `k` in `n` variables, `C(n-1+k, k)`.
pub fn count_monomials(n: usize, k: u32) -> u128 {
    if n == 0 {
        return u128::from(k == 0);
    }
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 - 1 + i) / i;
    }
    acc
}

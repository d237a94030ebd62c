use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Coefficient;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Combined bit length of numerator and denominator; the pivot cost metric.
pub fn bit_size(r: &Rational) -> u64 {
    r.numer().bits() + r.denom().bits()
}

impl Coefficient for Rational {
    type Domain = ();

    fn domain(&self) {}

    fn zero(_: &()) -> Self {
        Zero::zero()
    }

    fn one(_: &()) -> Self {
        One::one()
    }

    fn from_rational(_: &(), r: &Rational) -> Self {
        r.clone()
    }

    fn generator(_: &()) -> Option<Self> {
        None
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

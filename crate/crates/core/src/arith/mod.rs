//! Exact scalar arithmetic: rationals and cyclotomic fields `Q(ζ_m)`.
//!
//! Every coefficient ring used by the polynomial layer implements
//! [`Coefficient`]. The ring is identified by a runtime [`Coefficient::Domain`]
//! value so that, e.g., `Q(ζ_3)` and `Q(ζ_4)` share a Rust type but never mix.

mod cyclotomic;
mod rational;

use std::fmt;

pub use cyclotomic::{cyclotomic_polynomial, root_of_unity, CyclotomicField, CyclotomicNumber};
pub use rational::{bit_size, rational, Rational};

pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Domain: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn domain(&self) -> Self::Domain;
    fn zero(domain: &Self::Domain) -> Self;
    fn one(domain: &Self::Domain) -> Self;
    fn from_rational(domain: &Self::Domain, r: &Rational) -> Self;
    /// The adjoined generator `z` of the domain, if there is one.
    fn generator(domain: &Self::Domain) -> Option<Self>;

    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;

    /// `Some(r)` when the value lies in the prime field `Q`.
    fn as_rational(&self) -> Option<Rational>;

    fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r == num_traits::One::one())
    }
}

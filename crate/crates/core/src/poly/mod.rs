//! Sparse multivariate polynomials with exact coefficients.

mod exponent;
mod polynomial;
mod text;

pub use exponent::{count_monomials, lex_compare, monomials_of_degree, ExponentVector};
pub use polynomial::{factorial_product, CyclotomicPolynomial, MvPolynomial, RationalPolynomial};
pub use text::{parse_cyclotomic, parse_polynomial, parse_rational, render_monomial};

//! Exact computations with the quasi-symmetrizing action of the generalized
//! symmetric group `G(n,m) = S_n ≀ Z_m` and its super-coinvariant quotient
//! `Q[x_1..x_n] / ⟨QInv⁺_{n,m}⟩`, whose dimension is `mⁿ·Cₙ`.
//!
//! The dimension and Hilbert series are computed along independent routes:
//! enumeration of the Dyck-path monomial basis ([`paths`]), truncated
//! lexicographic Gröbner bases ([`groebner`]), exact per-degree linear algebra
//! ([`linalg`]), and the orthogonal complement under the differential pairing
//! ([`harness`]).

pub mod actions;
pub mod arith;
pub mod error;
pub mod group;
pub mod groebner;
pub mod harness;
pub mod linalg;
pub mod paths;
pub mod poly;
pub mod qsym;

pub use error::{Error, Result};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("operands live in different cyclotomic fields (orders {0} and {1})")]
    OrderMismatch(u32, u32),
    #[error("exponent vectors have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("polynomials have different variable counts ({0} and {1})")]
    VariableMismatch(usize, usize),
    #[error("coefficient domains do not match")]
    DomainMismatch,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("composition has {parts} parts but only {nvars} variables are available")]
    TooManyParts { parts: usize, nvars: usize },
    #[error("degree {k} exceeds the number of variables {n}")]
    DegreeTooLarge { k: usize, n: usize },
    #[error("group parameters differ: G({0},{1}) vs G({2},{3})")]
    GroupMismatch(usize, u32, usize, u32),
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("resource cap exceeded: {what} needs {needed} items, cap is {cap}")]
    CapExceeded { what: &'static str, needed: u128, cap: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Text form of polynomials: `3/2*x1^2*x3 - x2 + (1 + z)*x1`.
//!
//! Terms are printed lex-descending. Cyclotomic coefficients that are not
//! rational are wrapped in parentheses and written in the generator `z`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExponentVector, MvPolynomial};
use crate::arith::{Coefficient, CyclotomicField, CyclotomicNumber, Rational};
use crate::error::{Error, Result};

pub fn render_monomial(e: &ExponentVector) -> String {
    e.entries()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
        .collect::<Vec<_>>()
        .join("*")
}

impl<C: Coefficient> fmt::Display for MvPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let mono = render_monomial(e);
            let (negative, body) = match c.as_rational() {
                Some(r) => {
                    let a = r.abs();
                    let body = if mono.is_empty() {
                        a.to_string()
                    } else if One::is_one(&a) {
                        mono
                    } else {
                        format!("{a}*{mono}")
                    };
                    (r.is_negative(), body)
                }
                None if mono.is_empty() => (false, format!("({c})")),
                None => (false, format!("({c})*{mono}")),
            };
            match (idx, negative) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'z' => Tok::Z,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(s[start..i].parse().expect("digits"))));
                continue;
            }
            b'x' => {
                i += 1;
                let ds = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: usize = s[ds..i]
                    .parse()
                    .map_err(|_| Error::Parse { pos: start, msg: "expected variable index after 'x'".into() })?;
                if idx == 0 {
                    return Err(Error::Parse { pos: start, msg: "variables are numbered from x1".into() });
                }
                out.push((start, Tok::Var(idx - 1)));
                continue;
            }
            _ => return Err(Error::Parse { pos: start, msg: format!("unexpected character {:?}", c as char) }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, C: Coefficient> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    nvars: usize,
    domain: C::Domain,
}

impl<C: Coefficient> Parser<'_, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn constant(&self, r: Rational) -> MvPolynomial<C> {
        MvPolynomial::constant(self.nvars, self.domain.clone(), C::from_rational(&self.domain, &r))
    }

    fn expr(&mut self) -> Result<MvPolynomial<C>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MvPolynomial<C>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.unary()?;
                    let r = as_rational_constant(&d)
                        .filter(|r| !Zero::is_zero(r))
                        .ok_or(Error::Parse { pos: at, msg: "can only divide by a nonzero rational constant".into() })?;
                    acc = acc.scale_rational(&r.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MvPolynomial<C>> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MvPolynomial<C>> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.peek() {
            Some(Tok::Num(k)) => k.to_u32(),
            _ => None,
        };
        let Some(e) = e else {
            return self.err("expected a small non-negative integer exponent");
        };
        self.pos += 1;
        let mut acc = MvPolynomial::one(self.nvars, self.domain.clone());
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<MvPolynomial<C>> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Num(k) => {
                self.pos += 1;
                Ok(self.constant(Rational::from_integer(k)))
            }
            Tok::Var(i) => {
                if i >= self.nvars {
                    return self.err(format!("x{} is out of range for {} variables", i + 1, self.nvars));
                }
                self.pos += 1;
                Ok(MvPolynomial::variable(self.nvars, self.domain.clone(), i))
            }
            Tok::Z => match C::generator(&self.domain) {
                Some(z) => {
                    self.pos += 1;
                    Ok(MvPolynomial::constant(self.nvars, self.domain.clone(), z))
                }
                None => self.err("'z' is not available over the rationals"),
            },
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.err("expected a number, variable, 'z' or '('"),
        }
    }
}

fn as_rational_constant<C: Coefficient>(p: &MvPolynomial<C>) -> Option<Rational> {
    if p.is_zero() {
        return Some(<Rational as Zero>::zero());
    }
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(e, c)] if e.is_zero() => c.as_rational(),
        _ => None,
    }
}

/// Parses the text form. When `nvars` is `None` it is taken from the largest
/// variable index that occurs (at least 1).
pub fn parse_polynomial<C: Coefficient>(s: &str, nvars: Option<usize>, domain: C::Domain) -> Result<MvPolynomial<C>> {
    let toks = tokenize(s)?;
    let nvars = nvars.unwrap_or_else(|| {
        toks.iter().filter_map(|(_, t)| if let Tok::Var(i) = t { Some(i + 1) } else { None }).max().unwrap_or(1)
    });
    let mut p = Parser { toks: &toks, pos: 0, end: s.len(), nvars, domain };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

pub fn parse_rational(s: &str, nvars: Option<usize>) -> Result<MvPolynomial<Rational>> {
    parse_polynomial(s, nvars, ())
}

pub fn parse_cyclotomic(s: &str, nvars: Option<usize>, m: u32) -> Result<MvPolynomial<CyclotomicNumber>> {
    parse_polynomial(s, nvars, CyclotomicField::get(m)?)
}

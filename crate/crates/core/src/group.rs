//! The generalized symmetric group `G(n,m) = S_n ≀ Z_m`.
//!
//! An element is a colored permutation `(σ, c)`. Its pseudo-permutation
//! matrix has entry `ζ^{c_i}` at row `i`, column `σ(i)` and zeros elsewhere,
//! so the `i`-th component of `X·ᵗg` is `ζ^{c_i} x_{σ(i)}`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::arith::{root_of_unity, Coefficient, CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};

/// Default bound on the number of items any enumeration may produce.
pub const DEFAULT_ELEMENT_CAP: u128 = 2_000_000;

/// Environment variable overriding [`DEFAULT_ELEMENT_CAP`].
pub const CAP_ENV_VAR: &str = "SCOV_ELEMENT_CAP";

pub fn element_cap() -> u128 {
    std::env::var(CAP_ENV_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_ELEMENT_CAP)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    m: u32,
    /// 0-based images: `sigma[i] = σ(i)`.
    sigma: Vec<usize>,
    colors: Vec<u32>,
}

impl ColoredPermutation {
    /// Builds an element from 0-based `sigma` and colors, which are reduced mod `m`.
    pub fn new(m: u32, sigma: Vec<usize>, colors: Vec<u32>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOrder);
        }
        let n = sigma.len();
        if colors.len() != n {
            return Err(Error::InvalidElement(format!("{} colors for a permutation of {n} points", colors.len())));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidElement(format!("{sigma:?} is not a permutation")));
            }
        }
        let colors = colors.into_iter().map(|c| c % m).collect();
        Ok(ColoredPermutation { m, sigma, colors })
    }

    pub fn identity(n: usize, m: u32) -> Self {
        ColoredPermutation { m, sigma: (0..n).collect(), colors: vec![0; n] }
    }

    /// Diagonal element with `ζ` at `position` and 1 elsewhere.
    pub fn color_twist(n: usize, m: u32, position: usize) -> Self {
        let mut g = Self::identity(n, m);
        g.colors[position] = 1 % m;
        g
    }

    /// Uncolored transposition of `i` and `j` (0-based).
    pub fn transposition(n: usize, m: u32, i: usize, j: usize) -> Self {
        let mut g = Self::identity(n, m);
        g.sigma.swap(i, j);
        g
    }

    /// Adjacent transpositions followed by the color twist at the first position.
    pub fn generators(n: usize, m: u32) -> Vec<Self> {
        let mut gens: Vec<_> = (0..n.saturating_sub(1)).map(|i| Self::transposition(n, m, i, i + 1)).collect();
        if m > 1 && n > 0 {
            gens.push(Self::color_twist(n, m, 0));
        }
        gens
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s) && self.colors.iter().all(|&c| c == 0)
    }

    /// Components of `X·ᵗg`: entry `i` is `(ζ^{c_i}, σ(i))`.
    pub fn apply_to_variables(&self) -> Vec<(CyclotomicNumber, usize)> {
        self.sigma
            .iter()
            .zip(&self.colors)
            .map(|(&s, &c)| (root_of_unity(self.m, c as i64).expect("m > 0"), s))
            .collect()
    }

    /// Sum of the colors mod `m`; the weight is `ζ` to this power.
    pub fn weight_exponent(&self) -> u32 {
        (self.colors.iter().map(|&c| c as u64).sum::<u64>() % self.m as u64) as u32
    }

    /// `w(g)`, the product of the nonzero matrix entries.
    pub fn weight(&self) -> CyclotomicNumber {
        root_of_unity(self.m, self.weight_exponent() as i64).expect("m > 0")
    }

    /// The element whose matrix is `matrix(self) · matrix(other)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() || self.m != other.m {
            return Err(Error::GroupMismatch(self.n(), self.m, other.n(), other.m));
        }
        let sigma = self.sigma.iter().map(|&s| other.sigma[s]).collect();
        let colors = self.sigma.iter().zip(&self.colors).map(|(&s, &c)| (c + other.colors[s]) % self.m).collect();
        Ok(ColoredPermutation { m: self.m, sigma, colors })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut sigma = vec![0; n];
        let mut colors = vec![0; n];
        for i in 0..n {
            sigma[self.sigma[i]] = i;
            colors[self.sigma[i]] = (self.m - self.colors[i]) % self.m;
        }
        ColoredPermutation { m: self.m, sigma, colors }
    }

    pub fn to_matrix(&self) -> Vec<Vec<CyclotomicNumber>> {
        let field = CyclotomicField::get(self.m).expect("m > 0");
        let mut rows = vec![vec![CyclotomicNumber::zero(&field); self.n()]; self.n()];
        for (i, (z, s)) in self.apply_to_variables().into_iter().enumerate() {
            rows[i][s] = z;
        }
        rows
    }
}

pub fn matrix_product(a: &[Vec<CyclotomicNumber>], b: &[Vec<CyclotomicNumber>]) -> Vec<Vec<CyclotomicNumber>> {
    let n = a.len();
    let field = a[0][0].field().clone();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| (0..n).fold(CyclotomicNumber::zero(&field), |acc, j| acc.plus(&a[i][j].times(&b[j][k]))))
                .collect()
        })
        .collect()
}

/// `|G(n,m)| = mⁿ·n!`, saturating.
pub fn group_order(n: usize, m: u32) -> u128 {
    let fact = (1..=n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i));
    let pow = (m as u128).checked_pow(n as u32);
    match (fact, pow) {
        (Some(f), Some(p)) => f.saturating_mul(p),
        _ => u128::MAX,
    }
}

/// Every element of `G(n,m)` exactly once: permutations in lex order, and for
/// each permutation all color vectors in lex order.
pub fn enumerate_group(n: usize, m: u32, cap: u128) -> Result<Vec<ColoredPermutation>> {
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    let order = group_order(n, m);
    if order > cap {
        return Err(Error::CapExceeded { what: "group elements", needed: order, cap });
    }
    let colorings: Vec<Vec<u32>> =
        (0..n).map(|_| 0..m).multi_cartesian_product().collect::<Vec<_>>();
    let colorings = if n == 0 { vec![vec![]] } else { colorings };
    let mut out = Vec::with_capacity(order as usize);
    for sigma in (0..n).permutations(n) {
        for colors in &colorings {
            out.push(ColoredPermutation { m, sigma: sigma.clone(), colors: colors.clone() });
        }
    }
    Ok(out)
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma = self.sigma.iter().map(|s| (s + 1).to_string()).join(",");
        let colors = self.colors.iter().join(",");
        write!(f, "sigma=[{sigma}] colors=[{colors}] m={}", self.m)
    }
}

impl fmt::Debug for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::InvalidElement(format!("expected a bracketed list, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::InvalidElement(format!("bad list entry {x:?}"))))
        .collect()
}

/// Parses `sigma=[3,1,2] colors=[1,0,1] m=3` (1-based `sigma`).
impl FromStr for ColoredPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut sigma, mut colors, mut m) = (None, None, None);
        for field in s.split_whitespace() {
            let (key, value) =
                field.split_once('=').ok_or_else(|| Error::InvalidElement(format!("expected key=value, got {field:?}")))?;
            match key {
                "sigma" => sigma = Some(parse_list(value)?),
                "colors" => colors = Some(parse_list(value)?),
                "m" => m = Some(value.parse::<u32>().map_err(|_| Error::InvalidElement(format!("bad m {value:?}")))?),
                _ => return Err(Error::InvalidElement(format!("unknown key {key:?}"))),
            }
        }
        let sigma = sigma.ok_or_else(|| Error::InvalidElement("missing sigma".into()))?;
        let m = m.ok_or_else(|| Error::InvalidElement("missing m".into()))?;
        let colors = colors.unwrap_or_else(|| vec![0; sigma.len()]);
        if sigma.contains(&0) {
            return Err(Error::InvalidElement("sigma is 1-based".into()));
        }
        if colors.iter().any(|&c| c >= m as u64) {
            return Err(Error::InvalidElement(format!("colors must lie in [0, {m})")));
        }
        Self::new(m, sigma.into_iter().map(|s| s as usize - 1).collect(), colors.into_iter().map(|c| c as u32).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn example_element() -> ColoredPermutation {
        "sigma=[3,1,2] colors=[1,0,1] m=3".parse().unwrap()
    }

    #[test]
    fn identity_acts_trivially_on_variables() {
        let id = ColoredPermutation::identity(4, 3);
        for (i, (z, s)) in id.apply_to_variables().into_iter().enumerate() {
            assert!(z.is_one());
            assert_eq!(s, i);
        }
    }

    #[test]
    fn worked_example_matrix() {
        let g = example_element();
        let z = root_of_unity(3, 1).unwrap();
        let image = g.apply_to_variables();
        assert_eq!(image, vec![(z.clone(), 2), (root_of_unity(3, 0).unwrap(), 0), (z.clone(), 1)]);
        let moduli: Vec<usize> = image.iter().map(|(_, s)| *s).collect();
        assert_eq!(moduli, vec![2, 0, 1]);
        // rows (0 0 j), (1 0 0), (0 j 0)
        let mat = g.to_matrix();
        assert_eq!(mat[0][2], z);
        assert!(mat[1][0].is_one());
        assert_eq!(mat[2][1], z);
        assert_eq!(g.weight(), root_of_unity(3, 2).unwrap());
    }

    #[test]
    fn color_twist_image() {
        let g = ColoredPermutation::color_twist(3, 4, 0);
        let image = g.apply_to_variables();
        assert_eq!(image[0], (root_of_unity(4, 1).unwrap(), 0));
        assert!(image[1].0.is_one() && image[2].0.is_one());
    }

    #[test]
    fn weights() {
        assert!(ColoredPermutation::identity(3, 5).weight().is_one());
        let g = ColoredPermutation::new(3, vec![1, 2, 0], vec![1, 1, 1]).unwrap();
        assert!(g.weight().is_one());
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(2, 2, DEFAULT_ELEMENT_CAP).unwrap().len(), 8);
        assert_eq!(enumerate_group(1, 1, DEFAULT_ELEMENT_CAP).unwrap().len(), 1);
        let g33 = enumerate_group(3, 3, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g33.len(), 162);
        let distinct: HashSet<_> = g33.iter().map(|g| format!("{:?}", g.to_matrix())).collect();
        assert_eq!(distinct.len(), 162);
        assert!(matches!(enumerate_group(6, 4, 1000), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn compose_and_inverse() {
        let g = example_element();
        let id = ColoredPermutation::identity(3, 3);
        assert_eq!(g.compose(&id).unwrap(), g);
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().compose(&g).unwrap().is_identity());
        assert!(matches!(g.compose(&ColoredPermutation::identity(3, 2)), Err(Error::GroupMismatch(..))));
    }

    #[test]
    fn compose_is_matrix_product() {
        let all = enumerate_group(3, 3, DEFAULT_ELEMENT_CAP).unwrap();
        for (i, g) in all.iter().enumerate().step_by(7) {
            for h in all.iter().skip(i % 5).step_by(11) {
                let lhs = g.compose(h).unwrap().to_matrix();
                assert_eq!(lhs, matrix_product(&g.to_matrix(), &h.to_matrix()));
            }
        }
    }

    #[test]
    fn text_form() {
        let g = example_element();
        assert_eq!(g.to_string(), "sigma=[3,1,2] colors=[1,0,1] m=3");
        assert!("sigma=[1,1] m=2".parse::<ColoredPermutation>().is_err());
        assert!("sigma=[1,2] colors=[0,5] m=2".parse::<ColoredPermutation>().is_err());
        assert!("sigma=[0,1] m=2".parse::<ColoredPermutation>().is_err());
        assert!("colors=[0] m=2".parse::<ColoredPermutation>().is_err());
    }

    pub(crate) fn element(n: usize, m: u32) -> impl Strategy<Value = ColoredPermutation> {
        (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(0..m, n))
            .prop_map(move |(sigma, colors)| ColoredPermutation::new(m, sigma, colors).unwrap())
    }

    fn triple() -> impl Strategy<Value = (ColoredPermutation, ColoredPermutation, ColoredPermutation)> {
        (1usize..=4, 1u32..=4).prop_flat_map(|(n, m)| (element(n, m), element(n, m), element(n, m)))
    }

    proptest! {
        #[test]
        fn group_axioms((a, b, c) in triple()) {
            let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
            let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let id = ColoredPermutation::identity(a.n(), a.m());
            prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
            prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
            prop_assert_eq!(a.compose(&b).unwrap().weight(), a.weight().times(&b.weight()));
        }
    }
}

//! Lexicographic Gröbner bases of homogeneous ideals over `Q`, truncated by degree.
//!
//! Because every input is homogeneous, S-pairs are processed in order of
//! increasing lcm degree and anything above the truncation degree can be
//! dropped without affecting lower degrees. A basis computed to degree `D`
//! agrees with the true reduced basis in all degrees `≤ D`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Coefficient;
use crate::error::{Error, Result};
use crate::linalg::{rank, sparse_row};
use crate::paths::HilbertSeries;
use crate::poly::{monomials_of_degree, render_monomial, ExponentVector, RationalPolynomial};

/// Normal form of `p` modulo `basis`: no term of the result is divisible by
/// the leading monomial of any basis element.
pub fn reduce(p: &RationalPolynomial, basis: &[RationalPolynomial]) -> RationalPolynomial {
    let divisors: Vec<&RationalPolynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut rest = p.clone();
    let mut out = RationalPolynomial::zero(p.nvars(), ());
    while let Some((lm, lc)) = rest.pop_leading() {
        let hit = divisors.iter().find_map(|g| {
            let (glm, glc) = g.leading_term().expect("nonzero");
            lm.checked_sub(glm).map(|shift| (g, shift, glc))
        });
        match hit {
            Some((g, shift, glc)) => {
                let factor = -(&lc / glc);
                // the leading terms cancel; add the remaining terms of -factor·X^shift·g
                for (e, c) in g.terms().skip(1) {
                    rest.add_term(e.add(&shift), &c.times(&factor));
                }
            }
            None => out.add_term(lm, &lc),
        }
    }
    out
}

/// `S(f, g) = (L/LT(f))·f - (L/LT(g))·g` with `L = lcm(LM f, LM g)`.
pub fn s_polynomial(f: &RationalPolynomial, g: &RationalPolynomial) -> Result<RationalPolynomial> {
    let (fl, fc) = f.leading_term()?;
    let (gl, gc) = g.leading_term()?;
    let l = fl.lcm(gl);
    let a = f.mul_term(&l.checked_sub(fl).expect("lcm"), &fc.recip());
    let b = g.mul_term(&l.checked_sub(gl).expect("lcm"), &gc.recip());
    a.checked_sub(&b)
}

/// Order in which S-pairs of equal lcm degree are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairOrder {
    /// Smallest lcm degree, then lex-smallest lcm, then oldest pair.
    #[default]
    Normal,
    /// Smallest lcm degree, then lex-largest lcm, then newest pair.
    Reversed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    nvars: usize,
    generators: Vec<RationalPolynomial>,
    truncation_degree: u32,
    reduced: bool,
    skipped_pairs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Input(usize),
    Pair(usize, usize),
}

type QueueKey = (u32, Vec<i64>, i64, i64);

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[RationalPolynomial] {
        &self.generators
    }

    pub fn truncation_degree(&self) -> u32 {
        self.truncation_degree
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// S-pairs and inputs dropped because their degree exceeds the truncation.
    pub fn skipped_pairs(&self) -> usize {
        self.skipped_pairs
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.generators.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    /// One generator per line, leading monomial descending.
    pub fn to_text(&self) -> String {
        self.generators.iter().map(|g| format!("{g}\n")).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term {
            exponents: ExponentVector,
            coefficient: String,
        }
        let gens: Vec<Vec<Term>> = self
            .generators
            .iter()
            .map(|g| g.terms().map(|(e, c)| Term { exponents: e.clone(), coefficient: c.to_string() }).collect())
            .collect();
        serde_json::json!({
            "nvars": self.nvars,
            "order": "lex",
            "truncation_degree": self.truncation_degree,
            "reduced": self.reduced,
            "leading_monomials": self.generators.iter().map(|g| render_monomial(g.leading_monomial().unwrap())).collect::<Vec<_>>(),
            "generators": gens,
        })
    }
}

fn queue_key(order: PairOrder, lcm: &ExponentVector, a: usize, b: usize) -> QueueKey {
    let lex: Vec<i64> = lcm.entries().iter().map(|&e| e as i64).collect();
    match order {
        PairOrder::Normal => (lcm.degree(), lex, a as i64, b as i64),
        PairOrder::Reversed => (lcm.degree(), lex.into_iter().map(|e| -e).collect(), -(a as i64), -(b as i64)),
    }
}

/// Buchberger's algorithm up to degree `max_deg`, with the coprime-leading-term
/// criterion and the given pair order. The result is a minimal, not yet
/// inter-reduced, Gröbner basis up to `max_deg`.
pub fn buchberger_truncated_with(
    nvars: usize,
    gens: &[RationalPolynomial],
    max_deg: u32,
    order: PairOrder,
) -> Result<GroebnerBasis> {
    let mut inputs = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.nvars() != nvars {
            return Err(Error::VariableMismatch(nvars, g.nvars()));
        }
        if g.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous);
        }
        inputs.push(g.clone());
    }
    let mut skipped = 0;
    let mut queue: BinaryHeap<Reverse<(QueueKey, Task)>> = BinaryHeap::new();
    for (i, g) in inputs.iter().enumerate() {
        let lm = g.leading_monomial()?;
        if lm.degree() > max_deg {
            skipped += 1;
        } else {
            queue.push(Reverse((queue_key(order, lm, 0, i), Task::Input(i))));
        }
    }
    let mut basis: Vec<RationalPolynomial> = Vec::new();
    while let Some(Reverse((_, task))) = queue.pop() {
        let candidate = match task {
            Task::Input(i) => inputs[i].clone(),
            Task::Pair(i, j) => s_polynomial(&basis[i], &basis[j])?,
        };
        let h = reduce(&candidate, &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.monic()?;
        let hl = h.leading_monomial()?.clone();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let gl = g.leading_monomial()?;
            if gl.is_coprime(&hl) {
                continue;
            }
            let l = gl.lcm(&hl);
            if l.degree() > max_deg {
                skipped += 1;
                continue;
            }
            queue.push(Reverse((queue_key(order, &l, i, k), Task::Pair(i, k))));
        }
        basis.push(h);
    }
    Ok(GroebnerBasis { nvars, generators: basis, truncation_degree: max_deg, reduced: false, skipped_pairs: skipped })
}

pub fn buchberger_truncated(nvars: usize, gens: &[RationalPolynomial], max_deg: u32) -> Result<GroebnerBasis> {
    buchberger_truncated_with(nvars, gens, max_deg, PairOrder::Normal)
}

/// Drops generators with redundant leading monomials, inter-reduces the rest,
/// normalises to monic and sorts by leading monomial descending.
pub fn reduce_basis(g: &GroebnerBasis) -> GroebnerBasis {
    let mut kept: Vec<RationalPolynomial> = Vec::new();
    let mut gens: Vec<&RationalPolynomial> = g.generators.iter().filter(|p| !p.is_zero()).collect();
    // lower degrees first, so a redundant generator always meets its divisor already kept
    gens.sort_by_key(|p| p.leading_monomial().unwrap().degree());
    for p in gens {
        let lm = p.leading_monomial().unwrap();
        if !kept.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
            kept.push(p.clone());
        }
    }
    let mut reduced: Vec<RationalPolynomial> = (0..kept.len())
        .map(|i| {
            let others: Vec<RationalPolynomial> =
                kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            reduce(&kept[i], &others).monic().expect("leading term survives reduction")
        })
        .collect();
    reduced.sort_by(|a, b| b.leading_monomial().unwrap().cmp(a.leading_monomial().unwrap()));
    GroebnerBasis { generators: reduced, reduced: true, ..g.clone() }
}

/// Reduced Gröbner basis of `⟨gens⟩` up to degree `max_deg`.
pub fn groebner_basis(nvars: usize, gens: &[RationalPolynomial], max_deg: u32) -> Result<GroebnerBasis> {
    Ok(reduce_basis(&buchberger_truncated(nvars, gens, max_deg)?))
}

/// Per degree `0..=max_deg`, the monomials divisible by no leading monomial.
pub fn standard_monomials(g: &GroebnerBasis, max_deg: u32) -> Vec<Vec<ExponentVector>> {
    let leads = g.leading_monomials();
    (0..=max_deg)
        .map(|k| monomials_of_degree(g.nvars, k).into_iter().filter(|e| !leads.iter().any(|l| l.divides(e))).collect())
        .collect()
}

pub fn hilbert_from_groebner(g: &GroebnerBasis, max_deg: u32) -> HilbertSeries {
    HilbertSeries::new(standard_monomials(g, max_deg).iter().map(|s| s.len() as u64).collect())
}

/// Applies `X ↦ X^m` to every generator. The result is claimed to be the reduced
/// basis of the substituted ideal up to `m` times the original truncation.
pub fn substitute_basis(g: &GroebnerBasis, m: u32) -> GroebnerBasis {
    GroebnerBasis {
        nvars: g.nvars,
        generators: g.generators.iter().map(|p| p.substitute_power(m)).collect(),
        truncation_degree: g.truncation_degree * m,
        reduced: g.reduced,
        skipped_pairs: g.skipped_pairs,
    }
}

/// Rank of the degree-`k` part of `⟨gens⟩`: the span of `u·g` over generators `g`
/// and monomials `u` of complementary degree.
fn ideal_slice_rank(nvars: usize, gens: &[(u32, &RationalPolynomial)], k: u32, slice: &[ExponentVector]) -> usize {
    let index: HashMap<&ExponentVector, usize> = slice.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for &(d, g) in gens.iter().filter(|(d, _)| *d <= k) {
        for u in monomials_of_degree(nvars, k - d) {
            rows.push(sparse_row(g.terms().map(|(e, c)| (index[&e.add(&u)], c.clone()))));
        }
    }
    rank(rows, slice.len())
}

/// Hilbert function of `Q[X]/⟨gens⟩` in degrees `0..=max_deg` by exact linear
/// algebra on each degree slice, with no Gröbner computation involved.
pub fn quotient_hilbert_linear(nvars: usize, gens: &[RationalPolynomial], max_deg: u32) -> Result<HilbertSeries> {
    let mut graded = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.nvars() != nvars {
            return Err(Error::VariableMismatch(nvars, g.nvars()));
        }
        graded.push((g.homogeneous_degree().ok_or(Error::NotHomogeneous)?, g));
    }
    let coeffs: Vec<u64> = (0..=max_deg)
        .into_par_iter()
        .map(|k| {
            let slice = monomials_of_degree(nvars, k);
            (slice.len() - ideal_slice_rank(nvars, &graded, k, &slice)) as u64
        })
        .collect();
    Ok(HilbertSeries::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::poly::{count_monomials, parse_rational};
    use crate::qsym::qinv_generators;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> RationalPolynomial {
        parse_rational(s, Some(n)).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn reduction_examples() {
        assert!(reduce(&p("x1^2", 2), &[p("x1", 2)]).is_zero());
        assert_eq!(reduce(&p("x1*x2", 2), &[p("x1+x2", 2)]), p("-x2^2", 2));
        let q = p("3*x1*x2 - x2^2", 2);
        assert_eq!(reduce(&q, &[]), q);
    }

    #[test]
    fn s_polynomial_examples() {
        let s = s_polynomial(&p("x1", 2), &p("x2", 2)).unwrap();
        assert!(reduce(&s, &[p("x1", 2), p("x2", 2)]).is_zero());
        let f = p("2*x1*x2 - x2^2", 2);
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert_eq!(s_polynomial(&p("x1+x2", 2), &p("x1^2", 2)).unwrap(), p("x1*x2", 2));
        assert_eq!(s_polynomial(&p("0", 2), &p("x1", 2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn symmetric_ideal_in_two_variables() {
        let g = groebner_basis(2, &[p("x1+x2", 2), p("x1*x2", 2)], 4).unwrap();
        assert_eq!(g.leading_monomials(), vec![ev(&[1, 0]), ev(&[0, 2])]);
        assert_eq!(g.generators(), &[p("x1 + x2", 2), p("x2^2", 2)]);
        let standard = standard_monomials(&g, 4);
        assert_eq!(standard[0], vec![ev(&[0, 0])]);
        assert_eq!(standard[1], vec![ev(&[0, 1])]);
        assert_eq!(standard.iter().map(Vec::len).sum::<usize>(), 2);
    }

    #[test]
    fn quasi_invariant_ideal_two_variables() {
        let g = groebner_basis(2, &qinv_generators(2, 1, 4), 4).unwrap();
        assert_eq!(g.leading_monomials(), vec![ev(&[1, 0]), ev(&[0, 2])]);
        let g2 = groebner_basis(2, &qinv_generators(2, 2, 8), 8).unwrap();
        assert_eq!(g2.leading_monomials(), vec![ev(&[2, 0]), ev(&[0, 4])]);
        let std: Vec<ExponentVector> = standard_monomials(&g2, 8).into_iter().flatten().collect();
        let mut basis = crate::paths::basis_monomials(2, 2, 1000).unwrap();
        let mut std_sorted = std.clone();
        std_sorted.sort();
        basis.sort();
        assert_eq!(std_sorted, basis);
    }

    #[test]
    fn empty_and_invalid_inputs() {
        let g = groebner_basis(3, &[], 5).unwrap();
        assert!(g.generators().is_empty());
        let all = standard_monomials(&g, 3);
        assert_eq!(all[3].len() as u128, count_monomials(3, 3));
        assert_eq!(buchberger_truncated(2, &[p("x1 + x2^2", 2)], 4), Err(Error::NotHomogeneous));
    }

    #[test]
    fn reduce_basis_examples() {
        let raw = GroebnerBasis {
            nvars: 2,
            generators: vec![p("x1", 2), p("x1^2", 2), p("x2^2", 2)],
            truncation_degree: 4,
            reduced: false,
            skipped_pairs: 0,
        };
        let r = reduce_basis(&raw);
        assert_eq!(r.generators(), &[p("x1", 2), p("x2^2", 2)]);
        assert_eq!(reduce_basis(&r), r);
        // tails get reduced and leading coefficients normalised
        let raw = GroebnerBasis { generators: vec![p("2*x1 + 2*x2^0*x2", 2), p("x1*x2 + x2^2", 2)], ..raw };
        let r = reduce_basis(&raw);
        assert_eq!(r.generators(), &[p("x1 + x2", 2)]);
    }

    #[test]
    fn substitution_of_bases() {
        let g = groebner_basis(2, &[p("x1+x2", 2)], 3).unwrap();
        let s = substitute_basis(&g, 2);
        assert_eq!(s.generators(), &[p("x1^2 + x2^2", 2)]);
        assert_eq!(s.truncation_degree(), 6);
        assert_eq!(substitute_basis(&g, 1), g);
        let h = groebner_basis(2, &[p("x1+x2", 2), p("x1*x2", 2)], 4).unwrap();
        assert_eq!(substitute_basis(&h, 2).leading_monomials(), vec![ev(&[2, 0]), ev(&[0, 4])]);
    }

    #[test]
    fn linear_route_examples() {
        let h = quotient_hilbert_linear(2, &qinv_generators(2, 1, 2), 2).unwrap();
        assert_eq!(h, HilbertSeries::new(vec![1, 1, 0]));
        let free = quotient_hilbert_linear(3, &[], 4).unwrap();
        assert_eq!(free.coeffs(), &[1, 3, 6, 10, 15]);
        let h = quotient_hilbert_linear(2, &qinv_generators(2, 2, 5), 5).unwrap();
        assert_eq!(h, HilbertSeries::new(vec![1, 2, 2, 2, 1]));
    }

    #[test]
    fn pair_order_does_not_change_reduced_basis() {
        let gens = vec![p("x1^2 - 2*x2*x3", 3), p("x1*x2 + 3*x3^2", 3), p("x2^3 - x1*x3^2", 3)];
        let a = reduce_basis(&buchberger_truncated_with(3, &gens, 7, PairOrder::Normal).unwrap());
        let b = reduce_basis(&buchberger_truncated_with(3, &gens, 7, PairOrder::Reversed).unwrap());
        assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn groebner_matches_linear_algebra() {
        let gens = vec![p("x1^2 - 2*x2*x3", 3), p("x1*x2 + 3*x3^2", 3), p("x2^3 - x1*x3^2 + x3^3", 3)];
        let g = groebner_basis(3, &gens, 7).unwrap();
        assert_eq!(hilbert_from_groebner(&g, 7), quotient_hilbert_linear(3, &gens, 7).unwrap());
        assert_eq!(rational(1, 1), *g.generators()[0].leading_coefficient().unwrap());
    }

    /// Up to three homogeneous generators in `n` variables, each of degree ≤ 3.
    fn generator_sets() -> impl Strategy<Value = (usize, Vec<RationalPolynomial>)> {
        (1usize..=3).prop_flat_map(|n| {
            let poly = (1u32..=3).prop_flat_map(move |d| {
                prop::collection::vec((prop::collection::vec(0..n, d as usize), -4i64..=4, 1i64..=3), 1..=3).prop_map(
                    move |terms| {
                        let terms = terms.into_iter().map(|(vars, a, b)| {
                            let mut e = vec![0u32; n];
                            vars.into_iter().for_each(|v| e[v] += 1);
                            (ExponentVector::from(e), rational(a, b))
                        });
                        RationalPolynomial::from_terms(n, (), terms.collect::<Vec<_>>())
                    },
                )
            });
            (Just(n), prop::collection::vec(poly, 1..=3))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn standard_monomials_count_the_quotient((n, gens) in generator_sets()) {
            let g = groebner_basis(n, &gens, 6).unwrap();
            prop_assert_eq!(hilbert_from_groebner(&g, 6), quotient_hilbert_linear(n, &gens, 6).unwrap());
        }

        #[test]
        fn substitution_commutes_with_bases((n, gens) in generator_sets(), m in 2u32..=3) {
            let substituted: Vec<_> = gens.iter().map(|p| p.substitute_power(m)).collect();
            let lhs = groebner_basis(n, &substituted, 5 * m).unwrap();
            let rhs = substitute_basis(&groebner_basis(n, &gens, 5).unwrap(), m);
            prop_assert_eq!(lhs.generators(), rhs.generators());
        }

        #[test]
        fn reduced_basis_is_independent_of_pair_order((n, gens) in generator_sets()) {
            let a = reduce_basis(&buchberger_truncated_with(n, &gens, 6, PairOrder::Normal).unwrap());
            let b = reduce_basis(&buchberger_truncated_with(n, &gens, 6, PairOrder::Reversed).unwrap());
            prop_assert_eq!(a.generators(), b.generators());
        }
    }
}

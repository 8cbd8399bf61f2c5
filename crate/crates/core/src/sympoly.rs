//! Symmetric polynomials with exact integer coefficients, stored by their
//! dominant monomials.
//!
//! A key `a = (a_1 ≥ … ≥ a_N ≥ 0)` with coefficient `c` stands for `c · m_a`,
//! where `m_a` is the sum of all distinct monomials `x^σ(a)`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Sub};

use crate::{Error, Result};

pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, i128>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars > 0, "need at least one variable");
        SymPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = SymPoly::zero(nvars);
        p.terms.insert(vec![0; nvars], 1);
        p
    }

    /// `c · m_a` for a dominant exponent `a` of length `nvars`.
    pub fn monomial(nvars: usize, a: Exponent, c: i128) -> Result<Self> {
        let mut p = SymPoly::zero(nvars);
        p.add_term(a, c)?;
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, i128> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &[u32]) -> i128 {
        self.terms.get(a).copied().unwrap_or(0)
    }

    /// Coefficient of an arbitrary (not necessarily dominant) monomial.
    pub fn monomial_coeff(&self, u: &[u32]) -> i128 {
        let mut key = u.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.coeff(&key)
    }

    pub fn add_term(&mut self, a: Exponent, c: i128) -> Result<()> {
        if a.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: a.len(),
            });
        }
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(a.iter().map(|&x| i64::from(x)).collect()));
        }
        self.add_unchecked(a, c);
        Ok(())
    }

    fn add_unchecked(&mut self, a: Exponent, c: i128) {
        if c == 0 {
            return;
        }
        match self.terms.entry(a) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Lexicographically greatest dominant exponent with its coefficient.
    pub fn leading(&self) -> Option<(&Exponent, i128)> {
        self.terms.iter().next_back().map(|(k, &v)| (k, v))
    }

    pub fn scale(&self, c: i128) -> SymPoly {
        if c == 0 {
            return SymPoly::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, &v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Value at `x_1 = … = x_N = 1`.
    pub fn eval_at_ones(&self) -> i128 {
        self.terms
            .iter()
            .map(|(a, &c)| c * orbit_size(a) as i128)
            .sum()
    }

    /// Homogeneous degree if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let degrees: BTreeSet<u32> = self.terms.keys().map(|a| a.iter().sum()).collect();
        match degrees.len() {
            1 => degrees.into_iter().next(),
            _ => None,
        }
    }

    fn check_same_ring(&self, other: &SymPoly) {
        assert_eq!(
            self.nvars, other.nvars,
            "symmetric polynomials in different numbers of variables"
        );
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;

    fn add(self, rhs: &SymPoly) -> SymPoly {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (a, &c) in &rhs.terms {
            out.add_unchecked(a.clone(), c);
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;

    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &rhs.scale(-1)
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;

    /// The coefficient of `x^c` in `P·Q` is `Σ_{v} Q(v) P(c − v)` over all
    /// monomials `v` of `Q`. Every dominant `c` that can occur has the form
    /// `sort(a + v)` with `a` a dominant key of `P` and `v` in the orbit of a
    /// key of `Q`.
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        self.check_same_ring(rhs);
        let n = self.nvars;
        let expanded: Vec<(Exponent, i128)> = rhs
            .terms
            .iter()
            .flat_map(|(b, &c)| distinct_permutations(b).into_iter().map(move |v| (v, c)))
            .collect();
        let mut candidates = BTreeSet::new();
        for a in self.terms.keys() {
            for (v, _) in &expanded {
                let mut s: Exponent = a.iter().zip(v).map(|(x, y)| x + y).collect();
                s.sort_unstable_by(|x, y| y.cmp(x));
                candidates.insert(s);
            }
        }
        let mut out = SymPoly::zero(n);
        let mut diff = vec![0u32; n];
        for c in candidates {
            let mut total = 0i128;
            'outer: for (v, qc) in &expanded {
                for i in 0..n {
                    if v[i] > c[i] {
                        continue 'outer;
                    }
                    diff[i] = c[i] - v[i];
                }
                total += qc * self.monomial_coeff(&diff);
            }
            out.add_unchecked(c, total);
        }
        out
    }
}

/// All distinct rearrangements of `a`.
pub fn distinct_permutations(a: &[u32]) -> Vec<Exponent> {
    let mut cur = a.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Number of distinct rearrangements of `a`: `N! / ∏ mult!`.
pub fn orbit_size(a: &[u32]) -> u128 {
    let mut counts: BTreeMap<u32, u128> = BTreeMap::new();
    for &x in a {
        *counts.entry(x).or_insert(0) += 1;
    }
    let fact = |k: u128| (1..=k).product::<u128>();
    counts.values().fold(fact(a.len() as u128), |acc, &m| acc / fact(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(&[u32], i128)]) -> SymPoly {
        let mut out = SymPoly::zero(nvars);
        for (a, c) in terms {
            out.add_term(a.to_vec(), *c).unwrap();
        }
        out
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[1, 0, 0]), 3);
        assert_eq!(orbit_size(&[2, 1, 0]), 6);
        assert_eq!(orbit_size(&[1, 1, 0, 0]), 6);
        assert_eq!(distinct_permutations(&[1, 1, 0, 0]).len(), 6);
    }

    #[test]
    fn power_sum_square() {
        // (x1 + x2)^2 = m_(2,0) + 2 m_(1,1)
        let e1 = p(2, &[(&[1, 0], 1)]);
        let sq = &e1 * &e1;
        assert_eq!(sq, p(2, &[(&[2, 0], 1), (&[1, 1], 2)]));
        assert_eq!(sq.eval_at_ones(), 4);
    }

    #[test]
    fn product_of_orbits_three_vars() {
        // m_(1,0,0) · m_(1,1,0) = m_(2,1,0) + 3 m_(1,1,1)
        let a = p(3, &[(&[1, 0, 0], 1)]);
        let b = p(3, &[(&[1, 1, 0], 1)]);
        assert_eq!(&a * &b, p(3, &[(&[2, 1, 0], 1), (&[1, 1, 1], 3)]));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = p(2, &[(&[1, 0], 2), (&[1, 1], 1)]);
        let b = p(2, &[(&[1, 0], 2)]);
        assert_eq!(&a - &b, p(2, &[(&[1, 1], 1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn rejects_non_dominant_keys() {
        let mut a = SymPoly::zero(2);
        assert!(a.add_term(vec![0, 1], 1).is_err());
        assert!(a.add_term(vec![1], 1).is_err());
    }
}

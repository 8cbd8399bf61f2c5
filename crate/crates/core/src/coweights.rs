//! Coweight lattice classes, partitions, and the closed-form dimension
//! formulas used throughout the crate.
//!
//! Indexing follows the mathematical convention in documentation (entries
//! `λ_1, …, λ_m`) while the code is zero-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An integer vector `λ ∈ ℤ^m`. Lattice classes are queried with
/// [`classify`], not enforced by the type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(Vec<i64>);

impl Coweight {
    pub fn new(entries: Vec<i64>) -> Self {
        Coweight(entries)
    }

    pub fn zero(m: usize) -> Self {
        Coweight(vec![0; m])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn pairing(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// Prefix sums `λ_1 + … + λ_i` for `i = 1..=m`.
    pub fn prefix_sums(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Inverse of [`odd_even_split`]: `(o_1, e_1, o_2, e_2, …)`.
    pub fn interleave_from(odd: &Coweight, even: &Coweight) -> Result<Coweight> {
        if odd.len() != even.len() {
            return Err(Error::LengthMismatch {
                expected: odd.len(),
                got: even.len(),
            });
        }
        Ok(Coweight(
            odd.0
                .iter()
                .zip(&even.0)
                .flat_map(|(&o, &e)| [o, e])
                .collect(),
        ))
    }

    pub fn reversed(&self) -> Coweight {
        Coweight(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<i64>> for Coweight {
    fn from(v: Vec<i64>) -> Self {
        Coweight(v)
    }
}

impl From<&Partition> for Coweight {
    fn from(p: &Partition) -> Self {
        Coweight(p.parts().iter().map(|&x| i64::from(x)).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for Coweight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_csv(s).map(Coweight)
    }
}

/// A weakly decreasing vector of nonnegative integers. Trailing zeros are
/// trimmed, so `(2,1,0,0)` and `(2,1)` are the same partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(
                parts.iter().map(|&x| i64::from(x)).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn from_coweight(c: &Coweight) -> Result<Self> {
        if !c.is_nonnegative() || !c.is_weakly_decreasing() {
            return Err(Error::NotPartition(c.entries().to_vec()));
        }
        Partition::new(c.entries().iter().map(|&x| x as u32).collect())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `m` (`m` below `len()` is raised).
    pub fn padded(&self, m: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(m.max(self.0.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
                .collect(),
        )
    }

    /// Distinct part values in decreasing order with their multiplicities.
    pub fn value_groups(&self) -> Vec<(u32, usize)> {
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match groups.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        groups
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        Partition::with_max_parts(n, usize::MAX)
    }

    /// All partitions of `n` with at most `k` parts, in decreasing
    /// lexicographic order.
    pub fn with_max_parts(n: u32, k: usize) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == k {
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: Coweight = s.parse()?;
        Partition::from_coweight(&c)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(de)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

fn write_csv<T: fmt::Display>(f: &mut fmt::Formatter<'_>, v: &[T]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_csv(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
        })
        .collect()
}

/// The lattice classes of `ℤ^m` that the rest of the crate talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeClass {
    /// Weakly decreasing.
    Plus,
    /// Weakly increasing.
    Minus,
    /// All entries nonnegative.
    Nonneg,
    NonnegPlus,
    NonnegMinus,
    /// Degree zero with nonnegative prefix sums.
    Pos,
    /// Sum of a nonnegative vector and an element of `Pos`.
    NonnegPos,
}

impl LatticeClass {
    pub const ALL: [LatticeClass; 7] = [
        LatticeClass::Plus,
        LatticeClass::Minus,
        LatticeClass::Nonneg,
        LatticeClass::NonnegPlus,
        LatticeClass::NonnegMinus,
        LatticeClass::Pos,
        LatticeClass::NonnegPos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LatticeClass::Plus => "plus",
            LatticeClass::Minus => "minus",
            LatticeClass::Nonneg => "nonneg",
            LatticeClass::NonnegPlus => "nonneg-plus",
            LatticeClass::NonnegMinus => "nonneg-minus",
            LatticeClass::Pos => "pos",
            LatticeClass::NonnegPos => "nonneg-pos",
        }
    }
}

impl FromStr for LatticeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticeClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Membership test; `degree` additionally pins `Σ λ_i`.
pub fn classify(lambda: &Coweight, class: LatticeClass, degree: Option<i64>) -> bool {
    if degree.is_some_and(|d| lambda.degree() != d) {
        return false;
    }
    match class {
        LatticeClass::Plus => lambda.is_weakly_decreasing(),
        LatticeClass::Minus => lambda.is_weakly_increasing(),
        LatticeClass::Nonneg => lambda.is_nonnegative(),
        LatticeClass::NonnegPlus => lambda.is_nonnegative() && lambda.is_weakly_decreasing(),
        LatticeClass::NonnegMinus => lambda.is_nonnegative() && lambda.is_weakly_increasing(),
        LatticeClass::Pos => {
            lambda.degree() == 0 && lambda.prefix_sums().iter().all(|&s| s >= 0)
        }
        // a + b with a >= 0 and b in Pos has nonnegative prefix sums; conversely
        // put the full degree into the last coordinate of a.
        LatticeClass::NonnegPos => lambda.prefix_sums().iter().all(|&s| s >= 0),
    }
}

/// Same as [`classify`] but takes the class by name.
pub fn classify_named(lambda: &Coweight, class: &str, degree: Option<i64>) -> Result<bool> {
    Ok(classify(lambda, class.parse()?, degree))
}

/// `(λ_1, λ_3, …)` and `(λ_2, λ_4, …)`.
pub fn odd_even_split(lambda: &Coweight) -> Result<(Coweight, Coweight)> {
    if !lambda.len().is_multiple_of(2) {
        return Err(Error::OddLength(lambda.len()));
    }
    let odd = lambda.entries().iter().step_by(2).copied().collect();
    let even = lambda.entries().iter().skip(1).step_by(2).copied().collect();
    Ok((Coweight(odd), Coweight(even)))
}

/// `a_n(λ) = ⟨λ, (n−1, n−2, …, 0)⟩`.
pub fn a_n(lambda: &Coweight, n: usize) -> Result<i64> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    Ok(lambda
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| x * (n - 1 - i) as i64)
        .sum())
}

fn sum_of_squares(k: i64) -> i64 {
    // 1² + … + k²
    if k <= 0 {
        0
    } else {
        k * (k + 1) * (2 * k + 1) / 6
    }
}

/// `b(n, r) = nr + (1 − g) Σ_{i=1}^{n−1} i²`.
pub fn b(n: i64, r: i64, g: i64) -> i64 {
    n * r + (1 - g) * sum_of_squares(n - 1)
}

/// Closed form of `b(2n, r)`: `2nr + (1 − g)(2n − 1)n(4n − 1)/3`.
pub fn b_doubled_closed(n: i64, r: i64, g: i64) -> i64 {
    let num = (2 * n - 1) * n * (4 * n - 1);
    debug_assert_eq!(num % 3, 0);
    2 * n * r + (1 - g) * num / 3
}

/// Relative dimension `nd − (n/6)(n − 1)(1 + 4n)(g − 1)` of the smooth maps
/// onto the stacks of torsion sheaves of degree `d`.
pub fn relative_dim(n: i64, d: i64, g: i64) -> i64 {
    let num = n * (n - 1) * (4 * n + 1);
    debug_assert_eq!(num % 6, 0);
    n * d - num / 6 * (g - 1)
}

/// Both sides of the relative-dimension identity
/// `2·(rel(d) + rel(d')) = b(2n, d + d') + n(g − 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Eq40Check {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
}

pub fn verify_eq40(n: i64, d: i64, dp: i64, g: i64) -> Eq40Check {
    let lhs = 2 * (relative_dim(n, d, g) + relative_dim(n, dp, g));
    let rhs = b(2 * n, d + dp, g) + n * (g - 1);
    Eq40Check {
        lhs,
        rhs,
        equal: lhs == rhs,
    }
}

/// Rank of the affine fibration over the stratum of `λ ∈ ℤ^{2n}`:
/// `nd + (n−1)d' − a_{2n}(λ) − n(n−1)(g−1) − (4g−4) Σ_{i=1}^{n−1} i²`.
pub fn fibration_rank_eq27(n: i64, d: i64, dp: i64, lambda: &Coweight, g: i64) -> Result<i64> {
    let a = a_n(lambda, (2 * n) as usize)?;
    Ok(n * d + (n - 1) * dp - a - n * (n - 1) * (g - 1) - (4 * g - 4) * sum_of_squares(n - 1))
}

/// Genus and degree parameters bundled for the dimension identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimParams {
    pub g: i64,
    pub n: i64,
    pub d: i64,
    pub dp: i64,
}

impl DimParams {
    pub fn eq40(&self) -> Eq40Check {
        verify_eq40(self.n, self.d, self.dp, self.g)
    }

    pub fn fibration_rank(&self, lambda: &Coweight) -> Result<i64> {
        fibration_rank_eq27(self.n, self.d, self.dp, lambda, self.g)
    }
}

/// `θ = (μ'_1, μ_1, μ'_2, μ_2, …, μ'_m, μ_m)` with both padded to length `m`
/// (raised to the longer of the two if needed).
pub fn interleave(mu: &Partition, mu_p: &Partition, m: usize) -> Coweight {
    let m = m.max(mu.len()).max(mu_p.len());
    let odd = Coweight(mu_p.padded(m).into_iter().map(i64::from).collect());
    let even = Coweight(mu.padded(m).into_iter().map(i64::from).collect());
    Coweight::interleave_from(&odd, &even).expect("equal padded lengths")
}

/// A bubble-sort path from `θ` to its decreasing rearrangement, each step an
/// adjacent swap of `ξ_i < ξ_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranspositionChain {
    pub eta: Partition,
    /// `(i, a)` with `i` one-based: positions `i, i+1` swapped, `a = ξ_{i+1} − ξ_i`.
    pub steps: Vec<(usize, i64)>,
    /// `⟨θ − η, τ⟩` with `τ = (0, 1, …, 2m − 1)`; equals the sum of the `a`'s.
    pub gap: i64,
}

pub fn special_transposition_chain(theta: &Coweight) -> Result<TranspositionChain> {
    if !theta.is_nonnegative() {
        return Err(Error::NegativeEntry(theta.entries().to_vec()));
    }
    let mut xi = theta.entries().to_vec();
    let mut steps = Vec::new();
    while let Some(i) = xi.windows(2).position(|w| w[0] < w[1]) {
        steps.push((i + 1, xi[i + 1] - xi[i]));
        xi.swap(i, i + 1);
    }
    let gap = steps.iter().map(|&(_, a)| a).sum();
    let eta = Partition::new(xi.into_iter().map(|x| x as u32).collect())?;
    Ok(TranspositionChain { eta, steps, gap })
}

/// Dimension of the complete flag scheme of `⊕ O/𝔪^{η_i}`, `Σ η_i (i − 1)`.
pub fn cfl_dim(eta: &Partition) -> i64 {
    eta.parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i64::from(p) * i as i64)
        .sum()
}

/// `Σ (η_i − η_{i+1}) i(i − 1)/2`, the untelescoped form of [`cfl_dim`].
pub fn cfl_dim_literal(eta: &Partition) -> i64 {
    (1..=eta.len())
        .map(|i| {
            let diff = i64::from(eta.part(i - 1)) - i64::from(eta.part(i));
            diff * (i * (i - 1) / 2) as i64
        })
        .sum()
}

/// Dimension of `Aut(⊕ O/𝔪^{μ_i})`, `Σ μ_i (2i − 1)`.
pub fn aut_dim(mu: &Partition) -> i64 {
    mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i64::from(p) * (2 * i + 1) as i64)
        .sum()
}

/// `Σ (μ_i − μ_{i+1}) i²`, the untelescoped form of [`aut_dim`].
pub fn aut_dim_literal(mu: &Partition) -> i64 {
    (1..=mu.len())
        .map(|i| (i64::from(mu.part(i - 1)) - i64::from(mu.part(i))) * (i * i) as i64)
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Margin {
    pub margin: i64,
    pub equality: bool,
}

/// `dim CFl(F ⊕ F') − dim Aut F − dim Aut F' + d'`, always `≤ 0`.
pub fn lemma443_margin(mu: &Partition, mu_p: &Partition) -> Margin {
    let eta = merge_type(mu, mu_p);
    let margin = cfl_dim(&eta) - aut_dim(mu) - aut_dim(mu_p) + i64::from(mu_p.size());
    Margin {
        margin,
        equality: margin == 0,
    }
}

/// Sorted concatenation of two partitions (the type of `F ⊕ F'`).
pub fn merge_type(mu: &Partition, mu_p: &Partition) -> Partition {
    let mut v = mu.parts().to_vec();
    v.extend_from_slice(mu_p.parts());
    Partition::from_unsorted(v)
}

/// `μ'_1 ≥ μ_1 ≥ μ'_2 ≥ μ_2 ≥ … ≥ μ'_m ≥ μ_m`.
pub fn is_interleaved(mu: &Partition, mu_p: &Partition) -> bool {
    interleave(mu, mu_p, 0).is_weakly_decreasing()
}

/// `−Σ μ_i · i`, the dimension of `CFl(F)/Aut(F)`.
pub fn remark445_dim(mu: &Partition) -> i64 {
    -mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i64::from(p) * (i + 1) as i64)
        .sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight::new(v.to_vec())
    }

    fn pt(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert!(classify(&cw(&[0, 0]), LatticeClass::Pos, None));
        assert!(classify(&cw(&[1, -1]), LatticeClass::Pos, None));
        assert!(!classify(&cw(&[-1, 1]), LatticeClass::Pos, None));
        for class in LatticeClass::ALL {
            assert!(classify(&cw(&[0, 0, 0]), class, Some(0)));
        }
        assert!(!classify(&cw(&[2, 1]), LatticeClass::Plus, Some(4)));
        assert_eq!(
            classify_named(&cw(&[1]), "dominant", None),
            Err(Error::UnknownClass("dominant".into()))
        );
    }

    #[test]
    fn nonneg_pos_matches_decomposition_search() {
        // λ ∈ Λ^≻ + Λ^pos iff some a ≥ 0 with λ − a ∈ Λ^pos; search a directly.
        let range = -2..=2;
        for x in range.clone() {
            for y in range.clone() {
                for z in range.clone() {
                    let lam = cw(&[x, y, z]);
                    let mut found = false;
                    for a0 in 0..=4 {
                        for a1 in 0..=4 {
                            for a2 in 0..=6 {
                                let b = cw(&[x - a0, y - a1, z - a2]);
                                found |= classify(&b, LatticeClass::Pos, None);
                            }
                        }
                    }
                    assert_eq!(classify(&lam, LatticeClass::NonnegPos, None), found, "{lam}");
                }
            }
        }
    }

    #[test]
    fn odd_even_examples() {
        let (o, e) = odd_even_split(&cw(&[2, 1, 0, 0])).unwrap();
        assert_eq!((o, e), (cw(&[2, 0]), cw(&[1, 0])));
        let (o, e) = odd_even_split(&cw(&[1, 1, 1, 1])).unwrap();
        assert_eq!((o, e), (cw(&[1, 1]), cw(&[1, 1])));
        let (o, e) = odd_even_split(&cw(&[3, 1, 0, 0])).unwrap();
        assert_eq!(Coweight::interleave_from(&o, &e).unwrap(), cw(&[3, 1, 0, 0]));
        assert_eq!(odd_even_split(&cw(&[1, 2, 3])), Err(Error::OddLength(3)));
    }

    #[test]
    fn a_n_examples() {
        assert_eq!(a_n(&cw(&[3, 5]), 2), Ok(3));
        assert_eq!(a_n(&cw(&[0, 0, 0, 0]), 4), Ok(0));
        assert_eq!(a_n(&cw(&[1, 1, 1]), 3), Ok(3));
        assert!(matches!(a_n(&cw(&[1, 1]), 3), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn b_examples() {
        assert_eq!(b(2, 1, 0), 3);
        assert_eq!(b(4, 3, 1), 12);
        assert_eq!(b(4, 2, 0), 22);
        assert_eq!(b_doubled_closed(2, 2, 0), 22);
        for n in 1..6 {
            for r in 0..6 {
                for g in 0..4 {
                    assert_eq!(b(2 * n, r, g), b_doubled_closed(n, r, g));
                }
            }
        }
    }

    #[test]
    fn eq40_examples() {
        let c = |lhs, rhs| Eq40Check { lhs, rhs, equal: true };
        assert_eq!(verify_eq40(1, 0, 0, 0), c(0, 0));
        assert_eq!(verify_eq40(2, 1, 1, 0), c(20, 20));
        assert_eq!(verify_eq40(1, 2, 3, 1), c(10, 10));
        assert_eq!(relative_dim(2, 1, 0), 5);
    }

    #[test]
    fn eq27_examples() {
        assert_eq!(fibration_rank_eq27(1, 0, 1, &cw(&[0, 1]), 0), Ok(0));
        assert_eq!(fibration_rank_eq27(1, 1, 1, &cw(&[1, 1]), 1), Ok(0));
        assert_eq!(fibration_rank_eq27(2, 0, 0, &cw(&[0, 0, 0, 0]), 1), Ok(0));
        // n = 2, g = 0: 2d + d' − a_4(λ) + 2 + 4.
        let p = DimParams { g: 0, n: 2, d: 1, dp: 2 };
        assert_eq!(p.fibration_rank(&cw(&[1, 0, 0, 2])), Ok(2 + 2 - 3 + 2 + 4));
        assert!(p.fibration_rank(&cw(&[1, 0])).is_err());
    }

    #[test]
    fn interleave_examples() {
        assert_eq!(interleave(&pt(&[1]), &pt(&[1]), 1), cw(&[1, 1]));
        assert_eq!(interleave(&pt(&[1, 1]), &pt(&[2, 0]), 2), cw(&[2, 1, 0, 1]));
        assert_eq!(interleave(&pt(&[1, 1]), &pt(&[2, 1]), 2), cw(&[2, 1, 1, 1]));
        assert_eq!(interleave(&pt(&[]), &pt(&[3]), 2), cw(&[3, 0, 0, 0]));
    }

    #[test]
    fn chain_examples() {
        let c = special_transposition_chain(&cw(&[1, 2])).unwrap();
        assert_eq!((c.eta, c.steps, c.gap), (pt(&[2, 1]), vec![(1, 1)], 1));
        let c = special_transposition_chain(&cw(&[2, 1, 0, 1])).unwrap();
        assert_eq!((c.eta, c.gap), (pt(&[2, 1, 1]), 1));
        let c = special_transposition_chain(&cw(&[2, 2])).unwrap();
        assert_eq!((c.eta, c.steps, c.gap), (pt(&[2, 2]), vec![], 0));
        assert!(special_transposition_chain(&cw(&[1, -1])).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(cfl_dim(&pt(&[2, 1])), 1);
        assert_eq!(aut_dim(&pt(&[1, 1])), 4);
        assert_eq!(cfl_dim(&pt(&[2])), 0);
        assert_eq!(aut_dim(&pt(&[2])), 2);
        assert_eq!(remark445_dim(&pt(&[1, 1])), -3);
        assert_eq!(remark445_dim(&pt(&[5])), -5);
        assert_eq!(remark445_dim(&pt(&[2, 1])), -4);
    }

    #[test]
    fn margin_examples() {
        let m = |margin, equality| Margin { margin, equality };
        assert_eq!(lemma443_margin(&pt(&[2]), &pt(&[2])), m(0, true));
        assert_eq!(lemma443_margin(&pt(&[1, 1]), &pt(&[2])), m(-1, false));
        assert_eq!(lemma443_margin(&pt(&[1, 1]), &pt(&[2, 1])), m(0, true));
        assert!(is_interleaved(&pt(&[1, 1]), &pt(&[2, 1])));
        assert!(!is_interleaved(&pt(&[2]), &pt(&[1])));
        assert!(is_interleaved(&pt(&[]), &pt(&[3])));
    }

    #[test]
    fn partitions_enumerate_and_parse() {
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::all_of(0), vec![Partition::empty()]);
        assert_eq!(Partition::with_max_parts(4, 2).len(), 3);
        assert_eq!(pt(&[3, 1, 1]).conjugate(), pt(&[3, 1, 1]));
        assert_eq!(pt(&[4, 2]).conjugate(), pt(&[2, 2, 1, 1]));
        assert_eq!("2,1,0,0".parse::<Partition>().unwrap(), pt(&[2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Coweight>().is_err());
        assert_eq!("-1,0,3".parse::<Coweight>().unwrap().to_string(), "-1,0,3");
        assert_eq!(pt(&[3, 3, 1]).value_groups(), vec![(3, 2), (1, 1)]);
    }
}

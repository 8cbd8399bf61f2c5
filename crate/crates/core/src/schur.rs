//! Schur characters of `GL_N`, the Pieri rule, and the multiplicity-free
//! decomposition
//!
//! ```text
//! Sym^d(Λ²V) ⊗ Sym^{d'−d}V  ≅  ⊕_λ V^λ,    dim V = 2n,
//! ```
//!
//! the sum running over dominant `λ` of degree `d + d'` whose odd-position
//! entries sum to `d'` and even-position entries sum to `d`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::coweights::{odd_even_split, Coweight, Partition};
use crate::sympoly::{Exponent, SymPoly};
use crate::{Error, Result};

/// Multiset of irreducible constituents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurDecomposition {
    parts: BTreeMap<Partition, u64>,
}

impl SchurDecomposition {
    pub fn from_multiplicities(parts: BTreeMap<Partition, u64>) -> Self {
        SchurDecomposition {
            parts: parts.into_iter().filter(|(_, m)| *m > 0).collect(),
        }
    }

    pub fn multiplicities(&self) -> &BTreeMap<Partition, u64> {
        &self.parts
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.parts.get(lambda).copied().unwrap_or(0)
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.parts.keys().cloned().collect()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.parts.values().all(|&m| m == 1)
    }

    /// `Σ mult · s_λ` in `nvars` variables.
    pub fn recompose(&self, nvars: usize) -> Result<SymPoly> {
        let mut out = SymPoly::zero(nvars);
        for (lambda, &m) in &self.parts {
            out = &out + &schur_poly(lambda, nvars)?.scale(i128::from(m));
        }
        Ok(out)
    }
}

#[derive(Serialize)]
struct Constituent<'a> {
    lambda: &'a [u32],
    mult: u64,
}

impl Serialize for SchurDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.parts.len()))?;
        for (lambda, &mult) in &self.parts {
            seq.serialize_element(&Constituent {
                lambda: lambda.parts(),
                mult,
            })?;
        }
        seq.end()
    }
}

/// `s_λ(x_1, …, x_N)` as a symmetric polynomial. The coefficient of the
/// dominant monomial `x^c` is the number of semistandard tableaux of shape
/// `λ` and content `c`, counted by direct filling.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> Result<SymPoly> {
    if lambda.len() > nvars {
        return Err(Error::TooManyParts {
            parts: lambda.parts().to_vec(),
            nvars,
        });
    }
    let mut out = SymPoly::zero(nvars);
    for content in Partition::with_max_parts(lambda.size(), nvars) {
        let k = kostka(lambda, &content.padded(nvars));
        if k > 0 {
            out.add_term(content.padded(nvars), k as i128)?;
        }
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `λ` with content `c`.
pub fn kostka(lambda: &Partition, content: &[u32]) -> u64 {
    if content.iter().sum::<u32>() != lambda.size() {
        return 0;
    }
    let rows: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut remaining = content.to_vec();
    fill(&cells, 0, &mut grid, &mut remaining)
}

fn fill(cells: &[(usize, usize)], idx: usize, grid: &mut [Vec<u32>], remaining: &mut [u32]) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    // entries are 1-based values; rows weakly increase, columns strictly increase
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    let mut total = 0;
    for v in lo..=remaining.len() as u32 {
        let slot = (v - 1) as usize;
        if remaining[slot] == 0 {
            continue;
        }
        remaining[slot] -= 1;
        grid[r][c] = v;
        total += fill(cells, idx + 1, grid, remaining);
        remaining[slot] += 1;
    }
    grid[r][c] = 0;
    total
}

/// Weyl dimension `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)` of `V^λ` for `GL_N`.
pub fn weyl_dimension(lambda: &Partition, nvars: usize) -> u128 {
    let l = lambda.padded(nvars);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..nvars {
        for j in i + 1..nvars {
            num *= u128::from(l[i] - l[j]) + (j - i) as u128;
            den *= (j - i) as u128;
        }
    }
    num / den
}

/// Complete homogeneous polynomial `h_d` evaluated at the `N(N−1)/2`
/// products `x_i x_j`, `i < j`: the character of `Sym^d(Λ²V)`.
pub fn wedge2_sym_char(d: u32, nvars: usize) -> SymPoly {
    let pairs: Vec<(usize, usize)> = (0..nvars)
        .flat_map(|i| (i + 1..nvars).map(move |j| (i, j)))
        .collect();
    let mut counts: BTreeMap<Exponent, i128> = BTreeMap::new();
    let mut exp = vec![0u32; nvars];
    multisets(&pairs, 0, d, &mut exp, &mut counts);
    let mut out = SymPoly::zero(nvars);
    for (a, c) in counts {
        out.add_term(a, c).expect("dominant key of the right length");
    }
    out
}

fn multisets(
    pairs: &[(usize, usize)],
    start: usize,
    left: u32,
    exp: &mut Vec<u32>,
    counts: &mut BTreeMap<Exponent, i128>,
) {
    if left == 0 {
        if exp.windows(2).all(|w| w[0] >= w[1]) {
            *counts.entry(exp.clone()).or_insert(0) += 1;
        }
        return;
    }
    for k in start..pairs.len() {
        let (i, j) = pairs[k];
        exp[i] += 1;
        exp[j] += 1;
        multisets(pairs, k, left - 1, exp, counts);
        exp[i] -= 1;
        exp[j] -= 1;
    }
}

/// `h_k(x_1, …, x_N)`, the character of `Sym^k V`.
pub fn sym_char(k: u32, nvars: usize) -> SymPoly {
    let mut out = SymPoly::zero(nvars);
    for lambda in Partition::with_max_parts(k, nvars) {
        out.add_term(lambda.padded(nvars), 1).expect("dominant key");
    }
    out
}

/// Greedy change to the Schur basis: repeatedly peel off the
/// lexicographically greatest dominant exponent.
pub fn decompose_schur(p: &SymPoly) -> Result<SchurDecomposition> {
    let nvars = p.nvars();
    let mut rest = p.clone();
    let mut cache: HashMap<Partition, SymPoly> = HashMap::new();
    let mut parts = BTreeMap::new();
    while let Some((lead, coeff)) = rest.leading() {
        let lambda = Partition::new(lead.clone())?;
        if coeff < 0 {
            return Err(Error::NotACharacter {
                lambda: lambda.parts().to_vec(),
                coeff,
            });
        }
        if !cache.contains_key(&lambda) {
            cache.insert(lambda.clone(), schur_poly(&lambda, nvars)?);
        }
        let s = &cache[&lambda];
        rest = &rest - &s.scale(coeff);
        parts.insert(lambda, coeff as u64);
    }
    Ok(SchurDecomposition { parts })
}

/// All `μ ⊃ λ` with at most `N` parts such that `μ/λ` is a horizontal strip
/// of size `k`, i.e. `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …`.
pub fn pieri(lambda: &Partition, k: u32, nvars: usize) -> Result<BTreeSet<Partition>> {
    if lambda.len() > nvars {
        return Err(Error::TooManyParts {
            parts: lambda.parts().to_vec(),
            nvars,
        });
    }
    let l = lambda.padded(nvars);
    let mut out = BTreeSet::new();
    let mut mu = vec![0u32; nvars];
    strips(&l, 0, k, &mut mu, &mut out);
    Ok(out)
}

fn strips(l: &[u32], i: usize, left: u32, mu: &mut Vec<u32>, out: &mut BTreeSet<Partition>) {
    if i == l.len() {
        if left == 0 {
            out.insert(Partition::new(mu.clone()).expect("horizontal strip is a partition"));
        }
        return;
    }
    let cap = if i == 0 { l[0] + left } else { l[i - 1] };
    for v in l[i]..=cap.min(l[i] + left) {
        mu[i] = v;
        strips(l, i + 1, left - (v - l[i]), mu, out);
    }
}

fn check_order(d: u32, dp: u32) -> Result<()> {
    if d > dp {
        Err(Error::DegreeOrder { d, dp })
    } else {
        Ok(())
    }
}

fn odd_even_sums(lambda: &[u32]) -> (u32, u32) {
    let odd = lambda.iter().step_by(2).sum();
    let even = lambda.iter().skip(1).step_by(2).sum();
    (odd, even)
}

/// Dominant `λ ∈ ℤ^{2n}_{≥0}` of degree `d + d'` with odd-position sum `d'`
/// and even-position sum `d`.
pub fn lemma242_index(n: usize, d: u32, dp: u32) -> Result<BTreeSet<Partition>> {
    check_order(d, dp)?;
    Ok(Partition::with_max_parts(d + dp, 2 * n)
        .into_iter()
        .filter(|lambda| {
            let padded = lambda.padded(2 * n);
            let is_dec = |v: Vec<u32>| v.windows(2).all(|w| w[0] >= w[1]);
            odd_even_sums(&padded) == (dp, d)
                && is_dec(padded.iter().step_by(2).copied().collect())
                && is_dec(padded.iter().skip(1).step_by(2).copied().collect())
        })
        .collect())
}

/// The decomposition of `Sym^d(Λ²V) ⊗ Sym^{d'−d}V` for `dim V = 2n`,
/// computed from characters.
pub fn lemma242_decomposition(n: usize, d: u32, dp: u32) -> Result<SchurDecomposition> {
    check_order(d, dp)?;
    let nvars = 2 * n;
    let product = &wedge2_sym_char(d, nvars) * &sym_char(dp - d, nvars);
    decompose_schur(&product)
}

/// `true` iff the character decomposition is exactly the index set, each
/// constituent with multiplicity one.
pub fn verify_lemma242(n: usize, d: u32, dp: u32) -> Result<bool> {
    let decomposition = lemma242_decomposition(n, d, dp)?;
    let index = lemma242_index(n, d, dp)?;
    Ok(decomposition.is_multiplicity_free() && decomposition.support() == index)
}

/// `μ` with `μ^odd = μ^even = λ^even`: the element of the `d = d'` index set
/// from which `λ` is reached by a horizontal strip of size `d' − d`.
pub fn f_map(lambda: &Partition, n: usize, d: u32, dp: u32) -> Result<Partition> {
    if !lemma242_index(n, d, dp)?.contains(lambda) {
        return Err(Error::NotInIndexSet(lambda.parts().to_vec()));
    }
    let padded = lambda.padded(2 * n);
    let doubled = padded
        .iter()
        .skip(1)
        .step_by(2)
        .flat_map(|&e| [e, e])
        .collect();
    Partition::new(doubled)
}

/// Nonnegative weakly increasing `λ ∈ ℤ^{2n}` of degree `d + d'` with
/// odd-position sum `d` and even-position sum `d'`.
pub fn prop244_index(n: usize, d: u32, dp: u32) -> Result<BTreeSet<Coweight>> {
    check_order(d, dp)?;
    let mut out = BTreeSet::new();
    for lambda in Partition::with_max_parts(d + dp, 2 * n) {
        let mut v: Vec<i64> = lambda.padded(2 * n).into_iter().map(i64::from).collect();
        v.reverse();
        let c = Coweight::new(v);
        let (odd, even) = odd_even_split(&c)?;
        if odd.degree() == i64::from(d)
            && even.degree() == i64::from(dp)
            && odd.is_weakly_increasing()
            && even.is_weakly_increasing()
        {
            out.insert(c);
        }
    }
    Ok(out)
}

/// Entry reversal maps the increasing index set bijectively onto
/// [`lemma242_index`].
pub fn verify_index_reversal(n: usize, d: u32, dp: u32) -> Result<bool> {
    let inc = prop244_index(n, d, dp)?;
    let dec = lemma242_index(n, d, dp)?;
    let image: BTreeSet<Partition> = inc
        .iter()
        .map(|c| Partition::from_coweight(&c.reversed()))
        .collect::<Result<_>>()?;
    Ok(image.len() == inc.len() && image == dec)
}

/// Dimension of `Sym^d(Λ²V) ⊗ Sym^{d'−d}V` for `dim V = N`:
/// `C(C(N,2) + d − 1, d) · C(N + d' − d − 1, d' − d)`.
pub fn lemma242_dimension(nvars: u64, d: u64, dp: u64) -> u128 {
    multichoose(nvars * nvars.saturating_sub(1) / 2, d) * multichoose(nvars, dp - d)
}

/// Number of multisets of size `k` drawn from `m` kinds, `C(m + k − 1, k)`.
pub fn multichoose(m: u64, k: u64) -> u128 {
    if k == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    binomial(m + k - 1, k)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn set(v: &[&[u32]]) -> BTreeSet<Partition> {
        v.iter().map(|p| pt(p)).collect()
    }

    fn decomp(v: &[(&[u32], u64)]) -> SchurDecomposition {
        SchurDecomposition::from_multiplicities(v.iter().map(|(p, m)| (pt(p), *m)).collect())
    }

    #[test]
    fn schur_examples() {
        let s1 = schur_poly(&pt(&[1]), 2).unwrap();
        assert_eq!(s1.terms().len(), 1);
        assert_eq!(s1.coeff(&[1, 0]), 1);
        let s11 = schur_poly(&pt(&[1, 1]), 2).unwrap();
        assert_eq!(s11, SymPoly::monomial(2, vec![1, 1], 1).unwrap());
        // x1 x2 (x1 + x2) = m_(2,1)
        let s21 = schur_poly(&pt(&[2, 1]), 2).unwrap();
        assert_eq!(s21, SymPoly::monomial(2, vec![2, 1], 1).unwrap());
        assert_eq!(s21.eval_at_ones(), 2);
        assert!(matches!(
            schur_poly(&pt(&[1, 1, 1]), 2),
            Err(Error::TooManyParts { .. })
        ));
    }

    #[test]
    fn schur_dimension_matches_weyl() {
        for nvars in 1..=4 {
            for size in 0..=5 {
                for lambda in Partition::with_max_parts(size, nvars) {
                    let s = schur_poly(&lambda, nvars).unwrap();
                    assert_eq!(s.eval_at_ones() as u128, weyl_dimension(&lambda, nvars), "{lambda}");
                }
            }
        }
    }

    #[test]
    fn wedge2_examples() {
        assert_eq!(decompose_schur(&wedge2_sym_char(1, 4)).unwrap(), decomp(&[(&[1, 1], 1)]));
        for d in 0..4 {
            let w = wedge2_sym_char(d, 2);
            assert_eq!(w, SymPoly::monomial(2, vec![d, d], 1).unwrap());
            assert_eq!(w, schur_poly(&pt(&[d, d]), 2).unwrap());
        }
        assert_eq!(
            decompose_schur(&wedge2_sym_char(2, 4)).unwrap(),
            decomp(&[(&[2, 2], 1), (&[1, 1, 1, 1], 1)])
        );
    }

    #[test]
    fn decompose_examples() {
        let s = schur_poly(&pt(&[3, 1]), 3).unwrap();
        assert_eq!(decompose_schur(&s).unwrap(), decomp(&[(&[3, 1], 1)]));
        let v = schur_poly(&pt(&[1]), 2).unwrap();
        assert_eq!(
            decompose_schur(&(&v * &v)).unwrap(),
            decomp(&[(&[2], 1), (&[1, 1], 1)])
        );
        let bad = SymPoly::monomial(2, vec![1, 1], -1).unwrap();
        assert!(matches!(decompose_schur(&bad), Err(Error::NotACharacter { .. })));
        // m_(1,1) - m_(2,0): leading (2,0) positive, then s_(2) leaves -2 m_(1,1)
        let mut mixed = SymPoly::monomial(2, vec![2, 0], 1).unwrap();
        mixed.add_term(vec![1, 1], -1).unwrap();
        assert!(decompose_schur(&mixed).is_err());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri(&pt(&[1]), 1, 2).unwrap(), set(&[&[2], &[1, 1]]));
        assert_eq!(pieri(&pt(&[1, 1]), 2, 4).unwrap(), set(&[&[3, 1], &[2, 1, 1]]));
        assert_eq!(pieri(&pt(&[1, 1]), 1, 2).unwrap(), set(&[&[2, 1]]));
        assert_eq!(pieri(&pt(&[2, 1]), 0, 3).unwrap(), set(&[&[2, 1]]));
    }

    #[test]
    fn index_examples() {
        assert_eq!(lemma242_index(1, 1, 2).unwrap(), set(&[&[2, 1]]));
        assert_eq!(lemma242_index(2, 2, 2).unwrap(), set(&[&[2, 2], &[1, 1, 1, 1]]));
        assert_eq!(lemma242_index(2, 1, 3).unwrap(), set(&[&[3, 1], &[2, 1, 1]]));
        assert_eq!(lemma242_index(2, 3, 1), Err(Error::DegreeOrder { d: 3, dp: 1 }));
    }

    #[test]
    fn verify_examples() {
        assert!(verify_lemma242(1, 1, 1).unwrap());
        assert_eq!(lemma242_index(1, 1, 1).unwrap(), set(&[&[1, 1]]));
        assert!(verify_lemma242(2, 2, 2).unwrap());
        assert!(verify_lemma242(2, 1, 3).unwrap());
    }

    #[test]
    fn f_map_examples() {
        assert_eq!(f_map(&pt(&[2, 1]), 1, 1, 2).unwrap(), pt(&[1, 1]));
        assert_eq!(f_map(&pt(&[2, 2]), 2, 2, 2).unwrap(), pt(&[2, 2]));
        assert_eq!(f_map(&pt(&[2, 1, 1]), 2, 1, 3).unwrap(), pt(&[1, 1]));
        assert!(matches!(f_map(&pt(&[3]), 1, 1, 2), Err(Error::NotInIndexSet(_))));
    }

    #[test]
    fn prop244_examples() {
        let cw = |v: &[i64]| Coweight::new(v.to_vec());
        assert_eq!(prop244_index(1, 1, 2).unwrap(), [cw(&[1, 2])].into());
        assert!(verify_index_reversal(1, 1, 2).unwrap());
        for dp in 0..5 {
            assert_eq!(prop244_index(1, 0, dp).unwrap(), [cw(&[0, i64::from(dp)])].into());
        }
        assert_eq!(
            prop244_index(2, 2, 2).unwrap(),
            [cw(&[0, 0, 2, 2]), cw(&[1, 1, 1, 1])].into()
        );
        assert!(verify_index_reversal(2, 2, 2).unwrap());
    }

    #[test]
    fn decomposition_json() {
        let d = decomp(&[(&[2, 2], 1), (&[1, 1, 1, 1], 1)]);
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"[{"lambda":[1,1,1,1],"mult":1},{"lambda":[2,2],"mult":1}]"#
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(multichoose(0, 0), 1);
        assert_eq!(multichoose(0, 2), 0);
        assert_eq!(multichoose(6, 2), 21);
        assert_eq!(lemma242_dimension(4, 2, 2), 21);
    }
}

//! Involution combinatorics on `I = {1, …, d + d'}`: pairings, condition (C)
//! pairs, strata indexed by involutions, and the signed induced
//! representation `Ind_E` of `S_I`.
//!
//! Whether an individual stratum is geometrically empty is not decided here;
//! [`strata_for`] returns the full combinatorial index set.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::perm::Perm;
use crate::schur::{binomial, multichoose};
use crate::{Error, Result};

pub type Subset = BTreeSet<usize>;

/// An involution `w` of `{1..n}` (possibly the identity).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution(Perm);

impl Involution {
    pub fn new(perm: Perm) -> Result<Self> {
        if !perm.is_involution() {
            return Err(Error::Precondition(format!("{perm} is not an involution")));
        }
        Ok(Involution(perm))
    }

    /// From one-based disjoint transpositions.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let cycles: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        Involution::new(Perm::from_cycles(n, &cycles)?)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn perm(&self) -> &Perm {
        &self.0
    }

    /// Two-cycles `(i, j)` with `i < j`, one-based, sorted by `i`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        self.0.cycles().into_iter().map(|c| (c[0], c[1])).collect()
    }

    /// High points: the larger element of each two-cycle.
    pub fn hi(&self) -> Subset {
        self.transpositions().into_iter().map(|(_, j)| j).collect()
    }

    /// Low points: the smaller element of each two-cycle.
    pub fn lo(&self) -> Subset {
        self.transpositions().into_iter().map(|(i, _)| i).collect()
    }

    pub fn fixed(&self) -> Subset {
        (1..=self.n()).filter(|&i| self.0.apply(i - 1) == i - 1).collect()
    }

    /// The pairing whose blocks are the orbits of `w`.
    pub fn pairing(&self) -> Pairing {
        Pairing::new(self.n(), self.transpositions()).expect("orbits of an involution")
    }

    /// All involutions of `{1..n}`.
    pub fn all(n: usize) -> Vec<Involution> {
        let mut out = Vec::new();
        for d in 0..=n / 2 {
            for p in enumerate_pairings(n, d) {
                out.push(p.involution());
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Involution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A set partition of `{1..n}` into two-element blocks and singletons.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    /// From one-based pairs; every other element is a singleton.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut norm = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (a, b) = (a.min(b), a.max(b));
            if a == 0 || b > n || a == b || seen[a] || seen[b] {
                return Err(Error::Precondition(format!("bad pair ({a}, {b}) for n = {n}")));
            }
            seen[a] = true;
            seen[b] = true;
            norm.push((a, b));
        }
        norm.sort_unstable();
        Ok(Pairing { n, pairs: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn singletons(&self) -> Vec<usize> {
        let paired: Subset = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        (1..=self.n).filter(|i| !paired.contains(i)).collect()
    }

    /// Blocks sorted by their minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = self.pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        blocks.extend(self.singletons().into_iter().map(|s| vec![s]));
        blocks.sort();
        blocks
    }

    pub fn involution(&self) -> Involution {
        Involution::from_pairs(self.n, &self.pairs).expect("disjoint pairs")
    }

    /// Image under `σ` together with the sign picked up by the canonical
    /// wedges `e_i ∧ e_{i'}`, `i < i'`.
    pub fn act(&self, sigma: &Perm) -> SignedBasisVector {
        let mut sign = 1;
        let pairs = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (sigma.apply(a - 1) + 1, sigma.apply(b - 1) + 1);
                if x > y {
                    sign = -sign;
                }
                (x, y)
            })
            .collect();
        SignedBasisVector {
            pairing: Pairing::new(self.n, pairs).expect("image of a pairing"),
            sign,
        }
    }
}

impl Serialize for Pairing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(s)
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks() {
            let body: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", body.join(","))?;
        }
        Ok(())
    }
}

/// `±v_α`, a signed basis vector of `Ind_E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedBasisVector {
    pub pairing: Pairing,
    pub sign: i64,
}

fn enumerate_pairings(n: usize, npairs: usize) -> Vec<Pairing> {
    fn rec(
        free: &[usize],
        npairs: usize,
        nsingle: usize,
        cur: &mut Vec<(usize, usize)>,
        n: usize,
        out: &mut Vec<Pairing>,
    ) {
        let Some((&first, rest)) = free.split_first() else {
            out.push(Pairing::new(n, cur.clone()).expect("disjoint"));
            return;
        };
        if nsingle > 0 {
            rec(rest, npairs, nsingle - 1, cur, n, out);
        }
        if npairs > 0 {
            for k in 0..rest.len() {
                cur.push((first, rest[k]));
                let remaining: Vec<usize> = rest
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &x)| x)
                    .collect();
                rec(&remaining, npairs - 1, nsingle, cur, n, out);
                cur.pop();
            }
        }
    }
    if 2 * npairs > n {
        return Vec::new();
    }
    let free: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    rec(&free, npairs, n - 2 * npairs, &mut Vec::new(), n, &mut out);
    out.sort();
    out
}

fn check_order(d: usize, dp: usize) -> Result<()> {
    if d > dp {
        Err(Error::DegreeOrder {
            d: d as u32,
            dp: dp as u32,
        })
    } else {
        Ok(())
    }
}

/// The set `E`: partitions of `{1..d+d'}` into `d` pairs and `d' − d`
/// singletons, sorted.
pub fn enumerate_e(d: usize, dp: usize) -> Result<Vec<Pairing>> {
    check_order(d, dp)?;
    Ok(enumerate_pairings(d + dp, d))
}

/// `(d + d')! / (2^d d! (d' − d)!)`.
pub fn e_cardinality(d: usize, dp: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    fact(d + dp) / ((1u128 << d) * fact(d) * fact(dp - d))
}

/// Condition (C): `|J' ∩ {1..k}| ≤ |J ∩ {1..k}|` for every `k ≤ n`.
pub fn condition_c(j: &Subset, jp: &Subset, n: usize) -> Result<bool> {
    if j.len() != jp.len() {
        return Err(Error::SizeMismatch(j.len(), jp.len()));
    }
    let (mut cj, mut cjp) = (0usize, 0usize);
    for k in 1..=n {
        cj += usize::from(j.contains(&k));
        cjp += usize::from(jp.contains(&k));
        if cjp > cj {
            return Ok(false);
        }
    }
    if let (Some(lo), Some(hi)) = (j.first(), jp.last()) {
        debug_assert!(j.iter().chain(jp).all(|x| lo <= x && x <= hi));
    }
    Ok(true)
}

/// All `d`-element subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, d: usize) -> Vec<Subset> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>) {
        if left == 0 {
            out.push(cur.iter().copied().collect());
            return;
        }
        for x in start..=n {
            if n - x + 1 < left {
                break;
            }
            cur.push(x);
            rec(x + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, d, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CPair {
    #[serde(rename = "J")]
    pub j: Subset,
    #[serde(rename = "Jp")]
    pub jp: Subset,
    pub disjoint: bool,
}

/// Ordered pairs `(J, J')` of `d`-subsets of `{1..d+d'}` satisfying (C).
pub fn enumerate_c_pairs(d: usize, dp: usize) -> Result<Vec<CPair>> {
    check_order(d, dp)?;
    let n = d + dp;
    let sigma = subsets(n, d);
    let mut out = Vec::new();
    for j in &sigma {
        for jp in &sigma {
            if condition_c(j, jp, n)? {
                out.push(CPair {
                    j: j.clone(),
                    jp: jp.clone(),
                    disjoint: j.is_disjoint(jp),
                });
            }
        }
    }
    Ok(out)
}

/// Involutions `w` of `{1..n}` with `Lo(w) = J`, `Hi(w) = J'`, fixing the
/// rest. `n` defaults to the largest element involved.
pub fn strata_for(j: &Subset, jp: &Subset, n: Option<usize>) -> Result<Vec<Involution>> {
    let max = j.iter().chain(jp).copied().max().unwrap_or(0);
    let n = n.unwrap_or(max);
    if max > n {
        return Err(Error::Precondition(format!("element {max} exceeds n = {n}")));
    }
    if !j.is_disjoint(jp) {
        return Err(Error::Precondition("J and J' must be disjoint".into()));
    }
    if !condition_c(j, jp, n)? {
        return Err(Error::Precondition("condition (C) fails".into()));
    }
    let lows: Vec<usize> = j.iter().copied().collect();
    let highs: Vec<usize> = jp.iter().copied().collect();
    let mut out = Vec::new();
    for p in Perm::all(highs.len()) {
        let pairs: Vec<(usize, usize)> = lows
            .iter()
            .enumerate()
            .map(|(k, &lo)| (lo, highs[p.apply(k)]))
            .collect();
        if pairs.iter().all(|&(lo, hi)| lo < hi) {
            out.push(Involution::from_pairs(n, &pairs)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `Ind_E` on the basis `{v_α : α ∈ E}`.
#[derive(Debug, Clone)]
pub struct IndE {
    d: usize,
    dp: usize,
    basis: Vec<Pairing>,
    index: HashMap<Pairing, usize>,
}

impl IndE {
    pub fn new(d: usize, dp: usize) -> Result<Self> {
        let basis = enumerate_e(d, dp)?;
        let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(IndE { d, dp, basis, index })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Pairing] {
        &self.basis
    }

    /// `σ · v_{basis[i]} = sign · v_{basis[j]}`, returned as `(j, sign)`.
    pub fn act(&self, sigma: &Perm, i: usize) -> (usize, i64) {
        let image = self.basis[i].act(sigma);
        (self.index[&image.pairing], image.sign)
    }

    pub fn character(&self, sigma: &Perm) -> Result<i64> {
        self.check(sigma)?;
        Ok((0..self.dim())
            .map(|i| match self.act(sigma, i) {
                (j, s) if j == i => s,
                _ => 0,
            })
            .sum())
    }

    fn check(&self, sigma: &Perm) -> Result<()> {
        if sigma.n() != self.d + self.dp {
            return Err(Error::NotPermutation {
                perm: sigma.images().iter().map(|x| x + 1).collect(),
                n: self.d + self.dp,
            });
        }
        Ok(())
    }
}

/// Trace of `σ` on `Ind_E`.
pub fn ind_e_character(sigma: &Perm, d: usize, dp: usize) -> Result<i64> {
    IndE::new(d, dp)?.character(sigma)
}

/// The reference pairing `{1,2}, {3,4}, …, {2d−1,2d}` plus singletons.
fn reference_pairing(d: usize, dp: usize) -> Pairing {
    Pairing::new(d + dp, (0..d).map(|k| (2 * k + 1, 2 * k + 2)).collect()).expect("disjoint")
}

/// `χ_α(h)` for `h` in the stabilizer `S_α` of the reference pairing: the
/// sign of `h` restricted to the paired elements.
fn chi_alpha(h: &Perm, d: usize) -> i64 {
    let restricted: Vec<usize> = (0..2 * d).map(|i| h.apply(i)).collect();
    Perm::from_images(restricted)
        .expect("S_α preserves the paired elements")
        .sign()
}

/// `ind_{S_α}^{S_I} χ_α (σ) = (1/|S_α|) Σ_{g : g⁻¹σg ∈ S_α} χ_α(g⁻¹σg)`.
pub fn induced_character(sigma: &Perm, d: usize, dp: usize) -> Result<i64> {
    check_order(d, dp)?;
    let n = d + dp;
    if sigma.n() != n {
        return Err(Error::NotPermutation {
            perm: sigma.images().iter().map(|x| x + 1).collect(),
            n,
        });
    }
    let alpha = reference_pairing(d, dp);
    let fact = |k: usize| (1..=k as i64).product::<i64>();
    let stab_order = (1i64 << d) * fact(d) * fact(dp - d);
    let mut total = 0;
    for g in Perm::all(n) {
        let conj = g.inverse().compose(sigma).compose(&g);
        if alpha.act(&conj).pairing == alpha {
            total += chi_alpha(&conj, d);
        }
    }
    debug_assert_eq!(total % stab_order, 0);
    Ok(total / stab_order)
}

/// `Ind_E ≅ ind_{S_α}^{S_I} χ_α`, checked on every element of `S_I`.
pub fn verify_induced_iso(d: usize, dp: usize) -> Result<bool> {
    let ind = IndE::new(d, dp)?;
    for sigma in Perm::all(d + dp) {
        if ind.character(&sigma)? != induced_character(&sigma, d, dp)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The character of `Ind_E` as a map from cycle types (written `"2,1,1"`) to
/// values. Errors if it is not constant on some class.
pub fn character_by_class(d: usize, dp: usize) -> Result<BTreeMap<String, i64>> {
    let ind = IndE::new(d, dp)?;
    let mut out: BTreeMap<String, i64> = BTreeMap::new();
    for sigma in Perm::all(d + dp) {
        let key = sigma.cycle_type().to_string();
        let value = ind.character(&sigma)?;
        if let Some(&prev) = out.get(&key) {
            if prev != value {
                return Err(Error::Precondition(format!(
                    "character differs on class {key}: {prev} vs {value}"
                )));
            }
        }
        out.insert(key, value);
    }
    Ok(out)
}

/// `dim (Ind_E ⊗ W^{⊗(d+d')})^{S_I}` for `dim W = r`, by averaging
/// `χ(σ) r^{cycles(σ)}` over `S_I`.
pub fn invariants_dim(d: usize, dp: usize, r: u64) -> Result<i128> {
    let ind = IndE::new(d, dp)?;
    let all = Perm::all(d + dp);
    let mut total: i128 = 0;
    for sigma in &all {
        let chi = ind.character(sigma)?;
        total += i128::from(chi) * i128::from(r).pow(sigma.cycle_count() as u32);
    }
    let order = all.len() as i128;
    debug_assert_eq!(total % order, 0);
    Ok(total / order)
}

/// `dim Sym^d(Λ²W) · dim Sym^{d'−d}W` for `dim W = r`.
pub fn invariants_dim_closed(d: usize, dp: usize, r: u64) -> u128 {
    multichoose(binomial(r, 2) as u64, d as u64) * multichoose(r, (dp - d) as u64)
}

//! Orbits of `K = GL_d × GL_{d'}` on complete flags of `k^{d+d'}` and the
//! combinatorial sets that index them.
//!
//! Orbit counts over `F_2` and `F_3` are obtained by closing the flag set
//! under generators of `K(F_q)` with a union-find; nothing about the
//! expected answer enters the computation.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use serde::{Serialize, Serializer};
use serde::ser::SerializeStruct;

use crate::fq::{identity, Field, Matrix, Subspace};
use crate::stratcomb::{subsets, Involution, Subset};
use crate::{Error, Result};

/// A pair `(w, J)` of an involution of `{1..d+d'}` and a `d`-subset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassifyingPair {
    pub w: Involution,
    pub j: Subset,
}

impl ClassifyingPair {
    /// `Hi(w) ⊂ J` and `Lo(w) ∩ J = ∅`.
    pub fn in_bar_e(&self) -> bool {
        self.w.hi().is_subset(&self.j) && self.w.lo().is_disjoint(&self.j)
    }

    /// `Hi(w) ∩ J = ∅` and `Lo(w) ⊂ J`.
    pub fn in_dual_bar_e(&self) -> bool {
        self.w.hi().is_disjoint(&self.j) && self.w.lo().is_subset(&self.j)
    }
}

impl Serialize for ClassifyingPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassifyingPair", 2)?;
        st.serialize_field("w", &self.w)?;
        st.serialize_field("J", &self.j)?;
        st.end()
    }
}

fn filter_pairs(d: usize, dp: usize, keep: impl Fn(&ClassifyingPair) -> bool) -> Vec<ClassifyingPair> {
    let n = d + dp;
    let sigma = subsets(n, d);
    let mut out: Vec<ClassifyingPair> = Involution::all(n)
        .into_iter()
        .flat_map(|w| sigma.iter().map(move |j| ClassifyingPair { w: w.clone(), j: j.clone() }))
        .filter(|p| keep(p))
        .collect();
    out.sort();
    out
}

pub fn bar_e(d: usize, dp: usize) -> Vec<ClassifyingPair> {
    filter_pairs(d, dp, ClassifyingPair::in_bar_e)
}

pub fn dual_bar_e(d: usize, dp: usize) -> Vec<ClassifyingPair> {
    filter_pairs(d, dp, ClassifyingPair::in_dual_bar_e)
}

/// Number of `J` compatible with a fixed `w` in `bar_E(d, d')`:
/// `C(d + d' − |Hi| − |Lo|, d − |Hi|)`.
pub fn bar_e_fiber_size(w: &Involution, d: usize) -> u128 {
    let k = w.hi().len();
    let free = w.n() - 2 * k;
    match d.checked_sub(k) {
        Some(rest) if rest <= free => crate::schur::binomial(free as u64, rest as u64),
        _ => 0,
    }
}

/// A complete flag `0 ⊂ V_1 ⊂ … ⊂ V_n = F_q^n`, each step in reduced
/// row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagOverFq {
    pub q: u32,
    pub n: usize,
    pub flag: Vec<Subspace>,
}

impl FlagOverFq {
    pub fn image(&self, field: Field, g: &Matrix) -> FlagOverFq {
        FlagOverFq {
            q: self.q,
            n: self.n,
            flag: self.flag.iter().map(|v| v.image(field, g)).collect(),
        }
    }
}

/// All complete flags of `F_q^n`, sorted.
pub fn all_flags(q: u32, n: usize) -> Result<Vec<FlagOverFq>> {
    let field = Field::new(q)?;
    let mut chains: Vec<Vec<Subspace>> = vec![Vec::new()];
    for _ in 0..n {
        chains = chains
            .into_iter()
            .flat_map(|chain| {
                let top = chain.last().cloned().unwrap_or_else(|| Subspace::zero(n));
                top.extensions(field).into_iter().map(move |next| {
                    let mut c = chain.clone();
                    c.push(next);
                    c
                })
            })
            .collect();
    }
    let mut out: Vec<FlagOverFq> = chains
        .into_iter()
        .map(|flag| FlagOverFq { q, n, flag })
        .collect();
    out.sort();
    Ok(out)
}

/// `[n]_q! = ∏_{k ≤ n} (1 + q + … + q^{k−1})`.
pub fn flag_count(q: u32, n: usize) -> u128 {
    (1..=n as u32)
        .map(|k| (0..k).map(|i| u128::from(q).pow(i)).sum::<u128>())
        .product()
}

/// Generators of `GL_d(F_q) × GL_{d'}(F_q)` embedded block-diagonally: the
/// elementary transvections `1 + E_ij` inside each block and
/// `diag(c, 1, …, 1)` per block with `c` primitive.
pub fn k_generators(field: Field, d: usize, dp: usize) -> Vec<Matrix> {
    let n = d + dp;
    let mut gens = Vec::new();
    for (start, size) in [(0, d), (d, dp)] {
        for i in start..start + size {
            for j in start..start + size {
                if i != j {
                    let mut g = identity(n);
                    g[i][j] = 1;
                    gens.push(g);
                }
            }
        }
        if size > 0 && field.primitive() != 1 {
            let mut g = identity(n);
            g[start][start] = field.primitive();
            gens.push(g);
        }
    }
    gens
}

/// Largest `d + d'` handled for the given field size.
pub fn orbit_bound(q: u32) -> Result<usize> {
    match q {
        2 => Ok(4),
        3 => Ok(3),
        _ => Err(Error::FieldSize(q)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    pub flags: usize,
    /// Orbit sizes in decreasing order.
    pub sizes: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }
}

/// Orbits of `K(F_q)` on complete flags of `F_q^{d+d'}`.
pub fn k_orbit_decomposition(d: usize, dp: usize, q: u32) -> Result<OrbitDecomposition> {
    let field = Field::new(q)?;
    let bound = orbit_bound(q)?;
    if d + dp > bound {
        return Err(Error::SizeBound(format!("d + d' = {} exceeds {bound} for q = {q}", d + dp)));
    }
    let flags = all_flags(q, d + dp)?;
    let index: HashMap<&FlagOverFq, usize> = flags.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut uf = UnionFind::<usize>::new(flags.len());
    for g in k_generators(field, d, dp) {
        for (i, flag) in flags.iter().enumerate() {
            uf.union(i, index[&flag.image(field, &g)]);
        }
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for label in uf.into_labeling() {
        *sizes.entry(label).or_insert(0) += 1;
    }
    let mut sizes: Vec<usize> = sizes.into_values().collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(OrbitDecomposition {
        flags: flags.len(),
        sizes,
    })
}

pub fn k_orbits(d: usize, dp: usize, q: u32) -> Result<usize> {
    Ok(k_orbit_decomposition(d, dp, q)?.count())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRow {
    pub d: usize,
    pub dp: usize,
    pub q: u32,
    pub orbits: usize,
    pub bar_e: usize,
    pub dual_bar_e: usize,
}

impl OrbitRow {
    pub fn matches(&self) -> bool {
        self.orbits == self.bar_e && self.bar_e == self.dual_bar_e
    }
}

pub fn orbit_row(d: usize, dp: usize, q: u32) -> Result<OrbitRow> {
    Ok(OrbitRow {
        d,
        dp,
        q,
        orbits: k_orbits(d, dp, q)?,
        bar_e: bar_e(d, dp).len(),
        dual_bar_e: dual_bar_e(d, dp).len(),
    })
}

/// `k_orbits = |bar_E| = |dual_bar_E|`.
pub fn verify_counts(d: usize, dp: usize, q: u32) -> Result<bool> {
    Ok(orbit_row(d, dp, q)?.matches())
}

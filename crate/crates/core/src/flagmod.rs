//! Point counts for complete flags and automorphisms of finite torsion
//! modules `⊕ O/𝔪^{μ_i}` over a discrete valuation ring with residue field
//! `F_q`, as polynomials in `q`.
//!
//! The polynomial formulas (corner recursion for flags, product formula for
//! automorphisms) are checked against exhaustive enumeration on the Jordan
//! model over `F_2` and `F_3`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

pub use crate::coweights::merge_type;
use crate::coweights::{aut_dim, cfl_dim, is_interleaved, lemma443_margin, remark445_dim, Partition};
use crate::fq::{jordan_nilpotent, Field, Matrix, Subspace};
use crate::qpoly::{QPoly, QRat};
use crate::stratcomb::e_cardinality;
use crate::{Error, Result};

/// The module `⊕_i O/𝔪^{μ_i}`; its length is `|μ|`.
pub type ModuleType = Partition;

/// Largest module length handled by exhaustive enumeration over `F_q`.
pub fn brute_bound(q: u32) -> Result<usize> {
    match q {
        2 => Ok(5),
        3 => Ok(4),
        _ => Err(Error::FieldSize(q)),
    }
}

/// `F_q^{|μ|}` with the nilpotent Jordan operator of type `μ`.
#[derive(Debug, Clone)]
pub struct FiniteModule {
    field: Field,
    mu: Partition,
    t: Matrix,
}

impl FiniteModule {
    pub fn new(mu: &Partition, q: u32) -> Result<Self> {
        let field = Field::new(q)?;
        let bound = brute_bound(q)?;
        if mu.size() as usize > bound {
            return Err(Error::SizeBound(format!(
                "|μ| = {} exceeds {bound} for q = {q}",
                mu.size()
            )));
        }
        Ok(FiniteModule {
            field,
            mu: mu.clone(),
            t: jordan_nilpotent(mu.parts()),
        })
    }

    pub fn q(&self) -> u32 {
        u32::from(self.field.q())
    }

    pub fn dim(&self) -> usize {
        self.mu.size() as usize
    }

    pub fn operator(&self) -> &Matrix {
        &self.t
    }

    /// The Jordan type read off from `rank t^k`.
    pub fn jordan_type(&self) -> Partition {
        let n = self.dim();
        let mut ranks = vec![n];
        let mut power = crate::fq::identity(n);
        while *ranks.last().expect("nonempty") > 0 {
            power = self.field.mat_mul(&power, &self.t);
            ranks.push(self.field.rank(&power));
        }
        // #{i : μ_i ≥ k} = rank t^{k−1} − rank t^k
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let parts = (0..at_least.first().copied().unwrap_or(0))
            .map(|i| at_least.iter().filter(|&&c| c > i).count() as u32)
            .collect();
        Partition::from_unsorted(parts)
    }

    /// Complete chains of `t`-stable subspaces.
    pub fn count_flags(&self) -> u128 {
        fn chains(
            v: &Subspace,
            m: &FiniteModule,
            memo: &mut HashMap<Subspace, u128>,
        ) -> u128 {
            if v.dim() == m.dim() {
                return 1;
            }
            if let Some(&c) = memo.get(v) {
                return c;
            }
            let total = v
                .extensions(m.field)
                .iter()
                .filter(|w| w.is_stable(m.field, &m.t))
                .map(|w| chains(w, m, memo))
                .sum();
            memo.insert(v.clone(), total);
            total
        }
        chains(&Subspace::zero(self.dim()), self, &mut HashMap::new())
    }

    /// Invertible matrices commuting with `t`, by enumerating the centralizer.
    pub fn count_automorphisms(&self) -> u128 {
        let n = self.dim();
        if n == 0 {
            return 1;
        }
        let f = self.field;
        // Unknown X_{ab} at index a·n + b; equation (tX − Xt)_{ij} = 0.
        let equations: Matrix = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let mut row = vec![0u8; n * n];
                for k in 0..n {
                    let a = self.t[i][k];
                    row[k * n + j] = f.add(row[k * n + j], a);
                    let b = self.t[k][j];
                    row[i * n + k] = f.sub(row[i * n + k], b);
                }
                row
            })
            .collect();
        let basis = f.nullspace(&equations, n * n);
        let q = u64::from(f.q());
        let dim = basis.len() as u32;
        // Split the first coordinates across threads; walk the rest with an
        // odometer that adds one basis vector per digit increment.
        let outer = dim.min(4);
        let (head, tail) = basis.split_at(outer as usize);
        (0..q.pow(outer))
            .into_par_iter()
            .map(|code| {
                let mut x = [0u8; MAX_CELLS];
                let mut c = code;
                for b in head {
                    let coef = (c % q) as u8;
                    c /= q;
                    for (xi, &bi) in x.iter_mut().zip(b) {
                        *xi = f.add(*xi, f.mul(coef, bi));
                    }
                }
                let mut digits = vec![0u8; tail.len()];
                let mut count = 0u128;
                loop {
                    let mut scratch = x;
                    if is_invertible_flat(f, &mut scratch[..n * n], n) {
                        count += 1;
                    }
                    let Some(k) = digits.iter().position(|&dk| dk + 1 < f.q()) else {
                        break;
                    };
                    for j in 0..k {
                        // digit j wraps to zero: adding b_j once more cancels it
                        digits[j] = 0;
                        for (xi, &bi) in x.iter_mut().zip(&tail[j]) {
                            *xi = f.add(*xi, bi);
                        }
                    }
                    digits[k] += 1;
                    for (xi, &bi) in x.iter_mut().zip(&tail[k]) {
                        *xi = f.add(*xi, bi);
                    }
                }
                count
            })
            .sum()
    }
}

const MAX_CELLS: usize = 25;

fn is_invertible_flat(f: Field, m: &mut [u8], n: usize) -> bool {
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r * n + c] != 0) else {
            return false;
        };
        if p != c {
            for k in 0..n {
                m.swap(p * n + k, c * n + k);
            }
        }
        let inv = f.inv(m[c * n + c]);
        for r in c + 1..n {
            let factor = f.mul(m[r * n + c], inv);
            if factor != 0 {
                for k in c..n {
                    let s = f.mul(factor, m[c * n + k]);
                    m[r * n + k] = f.sub(m[r * n + k], s);
                }
            }
        }
    }
    true
}

/// Exhaustive count of complete flags of the module of type `μ` over `F_q`.
pub fn cfl_count_brute(mu: &ModuleType, q: u32) -> Result<u128> {
    Ok(FiniteModule::new(mu, q)?.count_flags())
}

/// Exhaustive count of `Aut` of the module of type `μ` over `F_q`.
pub fn aut_count_brute(mu: &ModuleType, q: u32) -> Result<u128> {
    Ok(FiniteModule::new(mu, q)?.count_automorphisms())
}

/// Removable corners of `μ` with their weights
/// `count_r = q^{m_1+…+m_{r−1}} [m_r]_q`, grouped by distinct part value.
pub fn corner_counts(mu: &ModuleType) -> Vec<(Partition, QPoly)> {
    let groups = mu.value_groups();
    let mut before = 0;
    let mut out = Vec::with_capacity(groups.len());
    let mut start = 0;
    for &(_, m) in &groups {
        let mut parts = mu.parts().to_vec();
        parts[start + m - 1] -= 1;
        let weight = &QPoly::monomial(before, 1) * &QPoly::q_int(m);
        out.push((Partition::from_unsorted(parts), weight));
        before += m;
        start += m;
    }
    out
}

/// `Σ_r count_r = [#parts]_q`.
pub fn corner_sanity(mu: &ModuleType) -> bool {
    let total = corner_counts(mu)
        .iter()
        .fold(QPoly::zero(), |acc, (_, w)| &acc + w);
    total == QPoly::q_int(mu.len())
}

/// Number of complete flags as a polynomial in `q`.
pub fn cfl_count_poly(mu: &ModuleType) -> QPoly {
    fn rec(mu: &Partition, memo: &mut HashMap<Partition, QPoly>) -> QPoly {
        if mu.is_empty() {
            return QPoly::one();
        }
        if let Some(p) = memo.get(mu) {
            return p.clone();
        }
        let total = corner_counts(mu)
            .into_iter()
            .fold(QPoly::zero(), |acc, (smaller, w)| &acc + &(&w * &rec(&smaller, memo)));
        memo.insert(mu.clone(), total.clone());
        total
    }
    rec(mu, &mut HashMap::new())
}

/// `q^a ∏_k (q^k − 1)^{e_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Factored {
    pub q_power: u32,
    pub factors: BTreeMap<u32, u32>,
}

impl Factored {
    pub fn expand(&self) -> QPoly {
        self.factors.iter().fold(QPoly::monomial(self.q_power as usize, 1), |acc, (&k, &e)| {
            &acc * &QPoly::q_minus_one(k as usize).pow(e)
        })
    }

    pub fn product(&self, other: &Factored) -> Factored {
        let mut factors = self.factors.clone();
        for (&k, &e) in &other.factors {
            *factors.entry(k).or_insert(0) += e;
        }
        Factored {
            q_power: self.q_power + other.q_power,
            factors,
        }
    }

    pub fn lcm(&self, other: &Factored) -> Factored {
        let mut factors = self.factors.clone();
        for (&k, &e) in &other.factors {
            let slot = factors.entry(k).or_insert(0);
            *slot = (*slot).max(e);
        }
        Factored {
            q_power: self.q_power.max(other.q_power),
            factors,
        }
    }

    /// `self / other`, assuming `other` divides `self` factorwise.
    pub fn quotient(&self, other: &Factored) -> Factored {
        let mut factors = self.factors.clone();
        for (&k, &e) in &other.factors {
            let slot = factors.get_mut(&k).expect("divisor factor present");
            *slot -= e;
        }
        factors.retain(|_, e| *e > 0);
        Factored {
            q_power: self.q_power - other.q_power,
            factors,
        }
    }
}

/// `|Aut|` in factored form: `q^{Σ μ'_j² − Σ_i m_i(m_i+1)/2} ∏_i ∏_{k ≤ m_i} (q^k − 1)`.
pub fn aut_order_factored(mu: &ModuleType) -> Factored {
    let conj_sq: u32 = mu.conjugate().parts().iter().map(|&c| c * c).sum();
    let mut out = Factored::default();
    let mut shift = 0;
    for (_, m) in mu.value_groups() {
        let m = m as u32;
        shift += m * (m + 1) / 2;
        for k in 1..=m {
            *out.factors.entry(k).or_insert(0) += 1;
        }
    }
    out.q_power = conj_sq - shift;
    out
}

/// `q^{Σ μ'_j²} ∏_i ∏_{k=1}^{m_i} (1 − q^{−k})`, expanded.
pub fn aut_order_poly(mu: &ModuleType) -> QPoly {
    aut_order_factored(mu).expand()
}

/// `#CFl(F ⊕ F') / (|Aut F| · |Aut F'|)`.
pub fn fiber_mass(mu: &ModuleType, mu_p: &ModuleType) -> QRat {
    let den = aut_order_factored(mu).product(&aut_order_factored(mu_p));
    QRat::new(cfl_count_poly(&merge_type(mu, mu_p)), den.expand()).expect("nonzero")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberRow {
    pub mu: Partition,
    pub mu_p: Partition,
    pub degree: i64,
    pub margin: i64,
    pub interleaved: bool,
}

/// Degree and margin data for one pair `(μ, μ')`.
pub fn fiber_row(mu: &ModuleType, mu_p: &ModuleType) -> FiberRow {
    FiberRow {
        mu: mu.clone(),
        mu_p: mu_p.clone(),
        degree: fiber_mass(mu, mu_p).q_degree().expect("nonzero mass"),
        margin: lemma443_margin(mu, mu_p).margin,
        interleaved: is_interleaved(mu, mu_p),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollidedMass {
    pub d: u32,
    pub dp: u32,
    pub mass: QRat,
    pub degree: i64,
    pub leading: i128,
    pub e_count: u128,
}

impl CollidedMass {
    /// Degree is `−d'` and the leading coefficient equals `|E|`.
    pub fn matches(&self) -> bool {
        self.degree == -i64::from(self.dp) && self.leading == self.e_count as i128
    }
}

/// `Σ_{μ ⊢ d, μ' ⊢ d'} fiber_mass(μ, μ')`, summed over a common factored
/// denominator.
pub fn collided_fiber_mass(d: u32, dp: u32) -> Result<CollidedMass> {
    if d > dp {
        return Err(Error::DegreeOrder { d, dp });
    }
    let mut terms = Vec::new();
    for mu in Partition::all_of(d) {
        for mu_p in Partition::all_of(dp) {
            let den = aut_order_factored(&mu).product(&aut_order_factored(&mu_p));
            terms.push((cfl_count_poly(&merge_type(&mu, &mu_p)), den));
        }
    }
    let common = terms.iter().fold(Factored::default(), |acc, (_, den)| acc.lcm(den));
    let num = terms.iter().fold(QPoly::zero(), |acc, (num, den)| {
        &acc + &(num * &common.quotient(den).expand())
    });
    let mass = QRat::new(num, common.expand())?;
    let degree = mass
        .q_degree()
        .ok_or_else(|| Error::Precondition("zero mass".into()))?;
    let leading = mass.leading()?;
    Ok(CollidedMass {
        d,
        dp,
        mass,
        degree,
        leading,
        e_count: e_cardinality(d as usize, dp as usize),
    })
}

/// `deg #CFl(μ) − deg |Aut(μ)| = −Σ μ_i i`.
pub fn remark445_check(mu: &ModuleType) -> bool {
    let cfl = cfl_count_poly(mu).degree().unwrap_or(0) as i64;
    let aut = aut_order_poly(mu).degree().unwrap_or(0) as i64;
    cfl - aut == remark445_dim(mu)
}

/// Polynomial degrees agree with the dimension formulas.
pub fn degree_check(mu: &ModuleType) -> bool {
    cfl_count_poly(mu).degree().unwrap_or(0) as i64 == cfl_dim(mu)
        && aut_order_poly(mu).degree().unwrap_or(0) as i64 == aut_dim(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn qp(v: &[i128]) -> QPoly {
        QPoly::new(v.to_vec())
    }

    #[test]
    fn brute_flag_examples() {
        assert_eq!(cfl_count_brute(&p(&[2]), 2), Ok(1));
        assert_eq!(cfl_count_brute(&p(&[1, 1]), 2), Ok(3));
        assert_eq!(cfl_count_brute(&p(&[2, 1]), 2), Ok(5));
        assert!(matches!(cfl_count_brute(&p(&[3, 2, 1]), 2), Err(Error::SizeBound(_))));
        assert!(matches!(cfl_count_brute(&p(&[1]), 5), Err(Error::FieldSize(5))));
    }

    #[test]
    fn poly_flag_examples() {
        assert_eq!(cfl_count_poly(&p(&[2, 1])), qp(&[1, 2]));
        assert_eq!(cfl_count_poly(&p(&[2])), QPoly::one());
        assert_eq!(cfl_count_poly(&p(&[1, 1, 1])), &qp(&[1, 1]) * &qp(&[1, 1, 1]));
    }

    #[test]
    fn aut_examples() {
        assert_eq!(aut_order_poly(&p(&[1, 1])), &qp(&[-1, 0, 1]) * &qp(&[0, -1, 1]));
        assert_eq!(aut_order_poly(&p(&[2])), qp(&[0, -1, 1]));
        assert_eq!(aut_order_poly(&p(&[1])), qp(&[-1, 1]));
        assert_eq!(aut_count_brute(&p(&[1, 1]), 2), Ok(6));
        assert_eq!(aut_count_brute(&p(&[2, 1]), 3), Ok(aut_order_poly(&p(&[2, 1])).eval(3) as u128));
    }

    #[test]
    fn merge_examples() {
        assert_eq!(merge_type(&p(&[1, 1]), &p(&[2])), p(&[2, 1, 1]));
        assert_eq!(merge_type(&p(&[2]), &p(&[2])), p(&[2, 2]));
        assert_eq!(merge_type(&p(&[1]), &Partition::empty()), p(&[1]));
    }

    #[test]
    fn fiber_mass_examples() {
        let m = fiber_mass(&p(&[1]), &p(&[2]));
        assert_eq!(m.q_degree(), Some(-2));
        assert_eq!(m.num(), &qp(&[1, 2]));
        assert!(is_interleaved(&p(&[1]), &p(&[2])));
        let m = fiber_mass(&p(&[1, 1]), &p(&[2]));
        assert_eq!(m.q_degree(), Some(-3));
        assert!(!is_interleaved(&p(&[1, 1]), &p(&[2])));
        let m = fiber_mass(&p(&[1]), &p(&[1]));
        assert_eq!(m.q_degree(), Some(-1));
        assert_eq!(m.num(), &qp(&[1, 1]));
        assert_eq!(m.den(), &QPoly::q_minus_one(1).pow(2));
    }

    #[test]
    fn collided_examples() {
        let c = collided_fiber_mass(1, 1).unwrap();
        assert_eq!((c.degree, c.leading, c.e_count), (-1, 1, 1));
        let c = collided_fiber_mass(1, 2).unwrap();
        assert_eq!((c.degree, c.leading, c.e_count), (-2, 3, 3));
        let c = collided_fiber_mass(0, 2).unwrap();
        assert_eq!((c.degree, c.leading), (-2, 1));
        assert_eq!(c.mass.eval(2), Some((1, 1)));
        assert_eq!(c.mass.eval(3), Some((1, 4)));
        assert!(collided_fiber_mass(2, 1).is_err());
    }

    #[test]
    fn remark_examples() {
        assert!(remark445_check(&p(&[1, 1])));
        assert!(remark445_check(&p(&[2, 1])));
        for d in 1..6 {
            assert!(remark445_check(&p(&[d])));
        }
    }

    #[test]
    fn jordan_model_has_requested_type() {
        for mu in Partition::all_of(4) {
            let m = FiniteModule::new(&mu, 3).unwrap();
            assert_eq!(m.jordan_type(), mu);
        }
    }

    #[test]
    fn corner_counts_sum_to_parts() {
        for n in 0..=7 {
            for mu in Partition::all_of(n) {
                assert!(corner_sanity(&mu), "{mu}");
                assert!(degree_check(&mu), "{mu}");
            }
        }
    }
}

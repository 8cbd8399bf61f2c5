//! Block Levi subgroups `M ⊂ GL_N`, antistandardness, and the inequality
//! `f(μ) ≤ ⟨λ, 2ρ̌ − 2ρ̌_M⟩` on the set `J(λ, ν)` together with its equality
//! case.
//!
//! Coweights are integer vectors of length `N`. A block is an increasing list
//! of one-based positions; `W_M` permutes positions inside each block.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coweights::Coweight;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct BlockLevi {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for BlockLevi {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().map(Vec::len).sum();
        BlockLevi::new(n, blocks)
    }
}

impl From<BlockLevi> for Vec<Vec<usize>> {
    fn from(l: BlockLevi) -> Self {
        l.blocks
    }
}

impl BlockLevi {
    /// Blocks are sorted internally; their order is kept.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::InvalidLevi("empty block".into()));
            }
            b.sort_unstable();
            for &i in b.iter() {
                if i == 0 || i > n || seen[i] {
                    return Err(Error::InvalidLevi(format!("position {i} invalid or repeated")));
                }
                seen[i] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidLevi(format!("blocks do not cover 1..={n}")));
        }
        Ok(BlockLevi { n, blocks })
    }

    pub fn torus(n: usize) -> Self {
        BlockLevi::new(n, (1..=n).map(|i| vec![i]).collect()).expect("singletons")
    }

    pub fn whole(n: usize) -> Self {
        BlockLevi::new(n, vec![(1..=n).collect()]).expect("one block")
    }

    /// `GL_n × GL_n ⊂ GL_{2n}` on odd and even positions.
    pub fn interleaved(n: usize) -> Self {
        let odd = (0..n).map(|k| 2 * k + 1).collect();
        let even = (0..n).map(|k| 2 * k + 2).collect();
        BlockLevi::new(2 * n, vec![odd, even]).expect("odd/even split")
    }

    /// Every block Levi of `GL_n`, blocks ordered by their minimum.
    pub fn all(n: usize) -> Vec<BlockLevi> {
        fn rec(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<BlockLevi>) {
            if i > n {
                out.push(BlockLevi::new(n, cur.clone()).expect("set partition"));
                return;
            }
            for k in 0..cur.len() {
                cur[k].push(i);
                rec(i + 1, n, cur, out);
                cur[k].pop();
            }
            cur.push(vec![i]);
            rec(i + 1, n, cur, out);
            cur.pop();
        }
        let mut out = Vec::new();
        rec(1, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(())
    }

    fn restrict(&self, v: &[i64], block: &[usize]) -> Vec<i64> {
        block.iter().map(|&i| v[i - 1]).collect()
    }

    /// Weakly decreasing along every block.
    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.blocks
            .iter()
            .all(|b| b.windows(2).all(|w| v[w[0] - 1] >= v[w[1] - 1]))
    }

    /// Weakly increasing along every block (`−Λ_M^+`).
    pub fn is_antidominant(&self, v: &[i64]) -> bool {
        self.blocks
            .iter()
            .all(|b| b.windows(2).all(|w| v[w[0] - 1] <= v[w[1] - 1]))
    }

    /// `w₀^M`: reverses the entries of each block.
    pub fn longest_element(&self, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        for b in &self.blocks {
            for (k, &i) in b.iter().enumerate() {
                out[i - 1] = v[b[b.len() - 1 - k] - 1];
            }
        }
        out
    }
}

impl std::fmt::Display for BlockLevi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        f.write_str(&parts.join(""))
    }
}

/// Parses `"1,3/2,4"`: blocks separated by `/`, positions by `,`.
pub fn parse_blocks(n: usize, s: &str) -> Result<BlockLevi> {
    let blocks = s
        .split('/')
        .map(|b| {
            b.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    BlockLevi::new(n, blocks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoData {
    pub two_rho: Vec<i64>,
    pub two_rho_m: Vec<i64>,
}

impl RhoData {
    pub fn new(levi: &BlockLevi) -> Self {
        let staircase = |b: usize| (0..b).map(move |k| b as i64 - 1 - 2 * k as i64);
        let two_rho = staircase(levi.n).collect();
        let mut two_rho_m = vec![0; levi.n];
        for b in &levi.blocks {
            for (&i, v) in b.iter().zip(staircase(b.len())) {
                two_rho_m[i - 1] = v;
            }
        }
        RhoData { two_rho, two_rho_m }
    }

    /// `2ρ̌ − 2ρ̌_M`.
    pub fn difference(&self) -> Vec<i64> {
        self.two_rho.iter().zip(&self.two_rho_m).map(|(a, b)| a - b).collect()
    }
}

fn pair(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Every simple coroot `e_a − e_b` of `M` pairs positively with `2ρ̌ − 2ρ̌_M`.
pub fn is_antistandard(levi: &BlockLevi) -> bool {
    simple_coroot_pairings(levi).into_iter().all(|p| p > 0)
}

/// `⟨e_a − e_b, 2ρ̌ − 2ρ̌_M⟩` for consecutive `a < b` within each block.
pub fn simple_coroot_pairings(levi: &BlockLevi) -> Vec<i64> {
    let diff = RhoData::new(levi).difference();
    levi.blocks
        .iter()
        .flat_map(|b| b.windows(2).map(|w| diff[w[0] - 1] - diff[w[1] - 1]).collect::<Vec<_>>())
        .collect()
}

pub fn dom_g(lambda: &[i64]) -> Vec<i64> {
    let mut v = lambda.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn dom_m(lambda: &[i64], levi: &BlockLevi) -> Result<Vec<i64>> {
    levi.check_len(lambda)?;
    let mut out = lambda.to_vec();
    for b in &levi.blocks {
        let sorted = dom_g(&levi.restrict(lambda, b));
        for (&i, v) in b.iter().zip(sorted) {
            out[i - 1] = v;
        }
    }
    Ok(out)
}

fn dominated(lambda: &[i64], mu: &[i64]) -> bool {
    let mut acc = 0;
    for (l, m) in lambda.iter().zip(mu) {
        acc += m - l;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

/// `λ ≤ μ` for `GL_N`: `μ − λ` is a nonnegative combination of `e_i − e_j`, `i < j`.
pub fn leq_g(lambda: &[i64], mu: &[i64]) -> Result<bool> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch {
            expected: lambda.len(),
            got: mu.len(),
        });
    }
    Ok(dominated(lambda, mu))
}

/// `λ ≤_M μ`: the same test inside every block.
pub fn leq_m(lambda: &[i64], mu: &[i64], levi: &BlockLevi) -> Result<bool> {
    levi.check_len(lambda)?;
    levi.check_len(mu)?;
    Ok(levi
        .blocks
        .iter()
        .all(|b| dominated(&levi.restrict(lambda, b), &levi.restrict(mu, b))))
}

/// `J(λ, ν)`: `M`-dominant `μ` with `dom_M(λ) ≤_M μ` and `dom_G(μ) ≤ ν`, in
/// lexicographic order.
pub fn j_set(lambda: &[i64], nu: &[i64], levi: &BlockLevi) -> Result<Vec<Coweight>> {
    levi.check_len(lambda)?;
    levi.check_len(nu)?;
    if nu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(nu.to_vec()));
    }
    let total: i64 = nu.iter().sum();
    if lambda.iter().sum::<i64>() != total || nu.is_empty() {
        return Ok(if nu.is_empty() { vec![Coweight::new(Vec::new())] } else { Vec::new() });
    }
    let (lo, hi) = (nu[nu.len() - 1], nu[0]);
    let lambda_m = dom_m(lambda, levi)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(levi.n);
    box_vectors(levi.n, lo, hi, total, &mut cur, &mut |mu| {
        if levi.is_dominant(mu)
            && leq_m(&lambda_m, mu, levi).expect("lengths match")
            && dominated(&dom_g(mu), nu)
        {
            out.push(Coweight::new(mu.to_vec()));
        }
    });
    Ok(out)
}

/// Visits vectors in `[lo, hi]^n` with entry sum `total`, lexicographically.
fn box_vectors(n: usize, lo: i64, hi: i64, total: i64, cur: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
    let left = n - cur.len();
    if left == 0 {
        if total == 0 {
            visit(cur);
        }
        return;
    }
    let rest = (left - 1) as i64;
    for x in lo..=hi {
        let remaining = total - x;
        if remaining < rest * lo || remaining > rest * hi {
            continue;
        }
        cur.push(x);
        box_vectors(n, lo, hi, remaining, cur, visit);
        cur.pop();
    }
}

/// `f(μ) = ⟨μ, 2ρ̌_M⟩ − ⟨dom_G μ, 2ρ̌⟩`.
pub fn f_val(mu: &[i64], levi: &BlockLevi) -> Result<i64> {
    levi.check_len(mu)?;
    if !levi.is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    let rho = RhoData::new(levi);
    Ok(pair(mu, &rho.two_rho_m) - pair(&dom_g(mu), &rho.two_rho))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub mu_prime: Vec<i64>,
    pub f: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct A12Report {
    pub levi: BlockLevi,
    pub lambda: Vec<i64>,
    pub nu: Vec<i64>,
    pub antistandard: bool,
    pub holds: bool,
    pub j_size: usize,
    /// Every `μ` with `f(μ) = rhs`.
    pub witnesses: Vec<Witness>,
    /// Every `μ` breaking the inequality or its equality characterization.
    pub failures: Vec<Witness>,
    /// `λ` is antidominant for `M` but not for `G`, so the two readings of the
    /// equality condition differ in their first clause.
    pub divergent_lambda: bool,
}

/// Checks `f(μ) ≤ ⟨λ, 2ρ̌ − 2ρ̌_M⟩` and the rearranged form
/// `⟨λ + μ, 2ρ̌_M⟩ ≤ ⟨λ + μ', 2ρ̌⟩` on all of `J(λ, ν)`. For antistandard `M`
/// also checks that equality holds exactly when `λ` is `G`-antidominant,
/// `μ = w₀^M λ` and `μ' = w₀ λ`.
pub fn verify_a12(lambda: &[i64], nu: &[i64], levi: &BlockLevi) -> Result<A12Report> {
    let rho = RhoData::new(levi);
    let rhs = pair(lambda, &rho.difference());
    let antistandard = is_antistandard(levi);
    let lambda_g_anti = lambda.windows(2).all(|w| w[0] <= w[1]);
    let w0_lambda: Vec<i64> = lambda.iter().rev().copied().collect();
    let w0m_lambda = levi.longest_element(lambda);
    let j = j_set(lambda, nu, levi)?;
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for mu in &j {
        let mu = mu.entries();
        let mu_prime = dom_g(mu);
        let f = f_val(mu, levi)?;
        let plus = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
        let ineq55 = f <= rhs;
        let ineq56 = pair(&plus(lambda, mu), &rho.two_rho_m) <= pair(&plus(lambda, &mu_prime), &rho.two_rho);
        let predicted = lambda_g_anti && mu == w0m_lambda.as_slice() && mu_prime == w0_lambda;
        let equal = f == rhs;
        let w = Witness {
            lambda: lambda.to_vec(),
            mu: mu.to_vec(),
            mu_prime,
            f,
            rhs,
        };
        let bad = !ineq55 || ineq55 != ineq56 || (antistandard && equal != predicted);
        if bad {
            failures.push(w.clone());
        }
        if equal {
            witnesses.push(w);
        }
    }
    Ok(A12Report {
        levi: levi.clone(),
        lambda: lambda.to_vec(),
        nu: nu.to_vec(),
        antistandard,
        holds: failures.is_empty(),
        j_size: j.len(),
        witnesses,
        failures,
        divergent_lambda: levi.is_antidominant(lambda) && !lambda_g_anti,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct A12Sweep {
    pub levi: BlockLevi,
    pub cells: usize,
    pub mu_checked: usize,
    pub equalities: usize,
    pub divergent_lambdas: usize,
    pub failures: Vec<Witness>,
}

impl A12Sweep {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All `λ ∈ [−λ_bound, λ_bound]^N` against all dominant `ν ∈ [−ν_bound, ν_bound]^N`.
pub fn sweep_a12(levi: &BlockLevi, lambda_bound: i64, nu_bound: i64) -> Result<A12Sweep> {
    let n = levi.n();
    let lambdas = cube(n, lambda_bound);
    let nus: Vec<Vec<i64>> = cube(n, nu_bound)
        .into_iter()
        .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    let reports: Vec<(usize, usize, usize, bool, Vec<Witness>)> = lambdas
        .par_iter()
        .map(|lambda| {
            let mut acc = (0, 0, 0, false, Vec::new());
            for nu in &nus {
                let r = verify_a12(lambda, nu, levi).expect("valid sweep cell");
                acc.0 += 1;
                acc.1 += r.j_size;
                acc.2 += r.witnesses.len();
                acc.3 |= r.divergent_lambda;
                acc.4.extend(r.failures);
            }
            acc
        })
        .collect();
    let mut sweep = A12Sweep {
        levi: levi.clone(),
        cells: 0,
        mu_checked: 0,
        equalities: 0,
        divergent_lambdas: 0,
        failures: Vec::new(),
    };
    for (cells, mus, eqs, divergent, failures) in reports {
        sweep.cells += cells;
        sweep.mu_checked += mus;
        sweep.equalities += eqs;
        sweep.divergent_lambdas += usize::from(divergent);
        sweep.failures.extend(failures);
    }
    Ok(sweep)
}

/// `[−b, b]^n` in lexicographic order.
pub fn cube(n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-b..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn levi(n: usize, blocks: &[&[usize]]) -> BlockLevi {
        BlockLevi::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn antistandard_examples() {
        assert!(is_antistandard(&levi(4, &[&[1, 3], &[2, 4]])));
        assert!(!is_antistandard(&levi(4, &[&[1, 2], &[3, 4]])));
        assert!(is_antistandard(&BlockLevi::torus(2)));
        assert_eq!(BlockLevi::interleaved(2), levi(4, &[&[1, 3], &[2, 4]]));
        assert!(BlockLevi::new(3, vec![vec![1, 2]]).is_err());
        assert!(BlockLevi::new(2, vec![vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn rho_data() {
        let r = RhoData::new(&BlockLevi::interleaved(2));
        assert_eq!(r.two_rho, vec![3, 1, -1, -3]);
        assert_eq!(r.two_rho_m, vec![1, 1, -1, -1]);
        assert_eq!(RhoData::new(&BlockLevi::whole(3)).difference(), vec![0, 0, 0]);
    }

    #[test]
    fn order_examples() {
        assert_eq!(leq_g(&[0, 0], &[1, -1]), Ok(true));
        assert_eq!(leq_g(&[1, -1], &[0, 0]), Ok(false));
        let l = levi(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(dom_m(&[3, 0, 1, 2], &l), Ok(vec![3, 2, 1, 0]));
        assert_eq!(leq_m(&[1, 0, -1, 0], &[1, 0, -1, 0], &l), Ok(true));
        assert!(leq_g(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn j_set_examples() {
        let torus = BlockLevi::torus(2);
        assert_eq!(j_set(&[0, 0], &[0, 0], &torus).unwrap(), vec![Coweight::new(vec![0, 0])]);
        assert_eq!(j_set(&[-1, 0], &[0, -1], &torus).unwrap(), vec![Coweight::new(vec![-1, 0])]);
        assert!(j_set(&[-1, 0], &[1, 0], &torus).unwrap().is_empty());
        assert_eq!(j_set(&[0, 0], &[-1, 0], &torus), Err(Error::NotDominant(vec![-1, 0])));
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_val(&[0, 0], &BlockLevi::torus(2)), Ok(0));
        assert_eq!(f_val(&[-1, 0], &BlockLevi::torus(2)), Ok(-1));
        assert_eq!(f_val(&[1, 0], &BlockLevi::whole(2)), Ok(0));
        assert!(f_val(&[0, 1], &BlockLevi::whole(2)).is_err());
    }

    #[test]
    fn a12_examples() {
        let r = verify_a12(&[0, 0, 0, 0], &[0, 0, 0, 0], &BlockLevi::interleaved(2)).unwrap();
        assert!(r.holds);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].mu, vec![0, 0, 0, 0]);
        let r = verify_a12(&[-1, 0], &[0, -1], &BlockLevi::torus(2)).unwrap();
        assert!(r.holds);
        assert_eq!(
            r.witnesses,
            vec![Witness {
                lambda: vec![-1, 0],
                mu: vec![-1, 0],
                mu_prime: vec![0, -1],
                f: -1,
                rhs: -1
            }]
        );
    }

    #[test]
    fn levi_enumeration_and_serde() {
        assert_eq!(BlockLevi::all(3).len(), 5);
        assert_eq!(BlockLevi::all(4).len(), 15);
        let l = BlockLevi::interleaved(2);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[[1,3],[2,4]]");
        assert_eq!(serde_json::from_str::<BlockLevi>("[[1,3],[2,4]]").unwrap(), l);
        assert_eq!(parse_blocks(4, "1,3/2,4").unwrap(), l);
        assert_eq!(l.to_string(), "{1,3}{2,4}");
    }
}

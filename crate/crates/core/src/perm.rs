//! Permutations of `{1, …, n}`, stored zero-based and printed one-based in
//! cycle notation.

use std::fmt;
use std::str::FromStr;

use crate::coweights::Partition;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotPermutation {
                    perm: images.iter().map(|x| x + 1).collect(),
                    n,
                });
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// From one-based images, e.g. `[2, 1, 3]` for `(1 2)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if images.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::NotPermutation {
                perm: images.to_vec(),
                n,
            });
        }
        Perm::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// From one-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n || touched[a - 1] {
                    return Err(Error::Parse(format!("bad cycle {cycle:?} for n = {n}")));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Zero-based image of zero-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| self.0[j] == i)
    }

    /// One-based cycles of length at least two, each starting at its minimum,
    /// sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Number of cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.n()];
        let mut lengths = Vec::new();
        for start in 0..self.n() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.0[i];
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Partition::from_unsorted(lengths)
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0;
        if even {
            1
        } else {
            -1
        }
    }

    /// All permutations of `{1..n}` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Perm(cur.clone())];
        while let Some(i) = cur.windows(2).rposition(|w| w[0] < w[1]) {
            let j = cur.iter().rposition(|&x| x > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(Perm(cur.clone()));
        }
        out
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, `"(1 2)(3 4)"`; the identity prints as `"()"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Parses cycle notation for a permutation of `{1..n}`; `n` is taken as the
/// largest entry unless given.
pub fn parse_cycles(s: &str, n: Option<usize>) -> Result<Perm> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("bad cycle notation `{s}`")))?;
        let cycle = body
            .0
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body.1.trim_start();
    }
    let max = cycles.iter().flatten().copied().max().unwrap_or(0);
    let n = n.unwrap_or(max);
    if max > n {
        return Err(Error::Parse(format!("entry {max} exceeds n = {n}")));
    }
    Perm::from_cycles(n, &cycles)
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cycles(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = parse_cycles("(1 2)(3 4)", Some(5)).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(p.n(), 5);
        assert!(p.is_involution());
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!("(1 3 2)".parse::<Perm>().unwrap().images(), &[2, 0, 1]);
        assert!(parse_cycles("(1 2", None).is_err());
        assert!(parse_cycles("(1 1)", None).is_err());
    }

    #[test]
    fn group_laws() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        for p in &all {
            assert!(p.compose(&p.inverse()).is_identity());
            assert_eq!(p.cycle_type().size(), 4);
        }
        let signs: i64 = all.iter().map(Perm::sign).sum();
        assert_eq!(signs, 0);
        let involutions = all.iter().filter(|p| p.is_involution()).count();
        assert_eq!(involutions, 10);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm::from_one_based(&[1, 1]).is_err());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
        assert!(Perm::from_one_based(&[2, 3, 1]).is_ok());
    }
}

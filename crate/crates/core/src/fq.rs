//! Linear algebra over a small prime field `F_q`.
//!
//! Vectors and matrices use `u8` entries reduced mod `q`. Subspaces are kept
//! in reduced row-echelon form, so two subspaces are equal exactly when their
//! encodings are.

use crate::{Error, Result};

pub type Vector = Vec<u8>;

/// Row-major square or rectangular matrix.
pub type Matrix = Vec<Vec<u8>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    q: u8,
}

impl Field {
    /// Only the primes 2 and 3 are supported.
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2 | 3 => Ok(Field { q: q as u8 }),
            _ => Err(Error::FieldSize(q)),
        }
    }

    pub fn q(self) -> u8 {
        self.q
    }

    #[inline]
    fn reduce(self, x: u8) -> u8 {
        if x >= self.q {
            x - self.q
        } else {
            x
        }
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        self.reduce(a + b)
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.reduce(a + self.q - b)
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        self.reduce(a * b)
    }

    /// In `F_2` and `F_3` every nonzero element is its own inverse.
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0);
        a
    }

    /// A generator of the multiplicative group.
    pub fn primitive(self) -> u8 {
        self.q - 1
    }

    /// All `q^n` vectors of `F_q^n`, in base-`q` counting order.
    pub fn vectors(self, n: usize) -> Vec<Vector> {
        let total = (self.q as usize).pow(n as u32);
        (0..total)
            .map(|mut k| {
                let mut v = vec![0u8; n];
                for x in v.iter_mut() {
                    *x = (k % self.q as usize) as u8;
                    k /= self.q as usize;
                }
                v
            })
            .collect()
    }

    pub fn mat_vec(self, m: &Matrix, v: &[u8]) -> Vector {
        m.iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b))))
            .collect()
    }

    pub fn mat_mul(self, a: &Matrix, b: &Matrix) -> Matrix {
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| {
                        row.iter()
                            .zip(b)
                            .fold(0, |acc, (&x, brow)| self.add(acc, self.mul(x, brow[j])))
                    })
                    .collect()
            })
            .collect()
    }

    /// Brings `rows` to reduced row-echelon form in place, drops zero rows and
    /// returns the pivot columns.
    pub fn rref(self, rows: &mut Matrix) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    let pivot_row = rows[r].clone();
                    for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        pivots
    }

    pub fn rank(self, m: &Matrix) -> usize {
        let mut rows = m.clone();
        self.rref(&mut rows).len()
    }

    pub fn is_invertible(self, m: &Matrix) -> bool {
        self.rank(m) == m.len()
    }

    /// A basis of `{x : m x = 0}`.
    pub fn nullspace(self, m: &Matrix, ncols: usize) -> Vec<Vector> {
        let mut rows = m.clone();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u8; ncols];
                x[f] = 1;
                for (row, &p) in rows.iter().zip(&pivots) {
                    x[p] = self.sub(0, row[f]);
                }
                x
            })
            .collect()
    }
}

/// Identity matrix of size `n`.
pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect()
}

/// The nilpotent operator in Jordan form with blocks of sizes `parts`: each
/// block sends `e_{k+1} ↦ e_k` and kills its first basis vector.
pub fn jordan_nilpotent(parts: &[u32]) -> Matrix {
    let n: usize = parts.iter().map(|&p| p as usize).sum();
    let mut t = vec![vec![0u8; n]; n];
    let mut start = 0;
    for &p in parts {
        for k in 1..p as usize {
            t[start + k - 1][start + k] = 1;
        }
        start += p as usize;
    }
    t
}

/// A subspace of `F_q^n` stored as its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    rows: Matrix,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, rows: Vec::new() }
    }

    pub fn span(field: Field, n: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut rows: Matrix = vectors.into_iter().collect();
        field.rref(&mut rows);
        Subspace { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &Matrix {
        &self.rows
    }

    pub fn contains(&self, field: Field, v: &[u8]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        field.rref(&mut rows).len() == self.dim()
    }

    /// Every subspace of dimension `dim + 1` containing `self`.
    pub fn extensions(&self, field: Field) -> Vec<Subspace> {
        let mut out: Vec<Subspace> = field
            .vectors(self.n)
            .into_iter()
            .filter(|v| !self.contains(field, v))
            .map(|v| Subspace::span(field, self.n, self.rows.iter().cloned().chain([v])))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `t(self) ⊂ self`.
    pub fn is_stable(&self, field: Field, t: &Matrix) -> bool {
        self.rows.iter().all(|r| self.contains(field, &field.mat_vec(t, r)))
    }

    /// The image `g(self)`.
    pub fn image(&self, field: Field, g: &Matrix) -> Subspace {
        Subspace::span(field, self.n, self.rows.iter().map(|r| field.mat_vec(g, r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        let f = Field::new(3).unwrap();
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.sub(0, 1), 2);
        assert!(Field::new(5).is_err());
        assert_eq!(f.vectors(2).len(), 9);
    }

    #[test]
    fn subspace_counts() {
        let f = Field::new(2).unwrap();
        let lines = Subspace::zero(3).extensions(f);
        assert_eq!(lines.len(), 7);
        let planes: std::collections::BTreeSet<Subspace> =
            lines.iter().flat_map(|l| l.extensions(f)).collect();
        assert_eq!(planes.len(), 7);
        let f3 = Field::new(3).unwrap();
        assert_eq!(Subspace::zero(2).extensions(f3).len(), 4);
    }

    #[test]
    fn jordan_and_nullspace() {
        let f = Field::new(2).unwrap();
        let t = jordan_nilpotent(&[2, 1]);
        assert_eq!(f.rank(&t), 1);
        assert_eq!(f.mat_mul(&t, &t), vec![vec![0; 3]; 3]);
        let kernel = f.nullspace(&t, 3);
        assert_eq!(kernel.len(), 2);
        for v in kernel {
            assert_eq!(f.mat_vec(&t, &v), vec![0, 0, 0]);
        }
        assert!(f.is_invertible(&identity(3)));
        assert!(!f.is_invertible(&t));
    }
}

//! Univariate integer polynomials in `q` and their quotients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Ascending coefficients; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<i128>", into = "Vec<i128>")]
pub struct QPoly(Vec<i128>);

impl From<Vec<i128>> for QPoly {
    fn from(v: Vec<i128>) -> Self {
        QPoly::new(v)
    }
}

impl From<QPoly> for Vec<i128> {
    fn from(p: QPoly) -> Self {
        p.0
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: i128) -> Self {
        QPoly::new(vec![c])
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// `c q^k`.
    pub fn monomial(k: usize, c: i128) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        QPoly::new(v)
    }

    /// `[m]_q = 1 + q + … + q^{m−1}`.
    pub fn q_int(m: usize) -> Self {
        QPoly::new(vec![1; m])
    }

    /// `q^k − 1`.
    pub fn q_minus_one(k: usize) -> Self {
        &QPoly::monomial(k, 1) - &QPoly::one()
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> i128 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(QPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: i128) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    /// gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> i128 {
        self.0.iter().fold(0, |g, &c| gcd(g, c.abs()))
    }

    fn exact_div(&self, c: i128) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x / c).collect())
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        QPoly::new(
            (0..n)
                .map(|i| self.0.get(i).copied().unwrap_or(0) + rhs.0.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &rhs.scale(-1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    /// Descending powers, e.g. `2q+1` or `q^2-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "q".to_string(),
                (1, m) => format!("{m}q"),
                (k, 1) => format!("q^{k}"),
                (k, m) => format!("{m}q^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// A quotient of polynomials, kept with coprime integer contents and a
/// positive leading denominator coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        let mut r = QRat { num, den };
        r.normalize();
        Ok(r)
    }

    fn normalize(&mut self) {
        let g = gcd(self.num.content(), self.den.content());
        let g = if self.den.leading() < 0 { -g } else { g };
        self.num = self.num.exact_div(g);
        self.den = self.den.exact_div(g);
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num − deg den`; `None` for zero.
    pub fn q_degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree()? as i64)
    }

    /// Exact value at an integer `q` as a reduced fraction `(p, r)`, `r > 0`.
    pub fn eval(&self, q: i128) -> Option<(i128, i128)> {
        let (p, r) = (self.num.eval(q), self.den.eval(q));
        if r == 0 {
            return None;
        }
        let g = gcd(p.abs(), r.abs()) * r.signum();
        Some((p / g, r / g))
    }

    /// The first `terms` coefficients of the expansion at `q → ∞`, as
    /// `(exponent, coefficient)` pairs starting at the q-degree. Requires a
    /// denominator with leading coefficient `±1`.
    pub fn laurent(&self, terms: usize) -> Result<Vec<(i64, i128)>> {
        let Some(top) = self.q_degree() else {
            return Ok(Vec::new());
        };
        let lead = self.den.leading();
        if lead.abs() != 1 {
            return Err(Error::NonMonic);
        }
        // With x = 1/q: num = q^a N(x), den = q^b D(x), D(0) = ±1.
        let rev = |p: &QPoly, len: usize| -> Vec<i128> {
            (0..len)
                .map(|i| p.0.len().checked_sub(1 + i).map_or(0, |k| p.0[k]))
                .collect()
        };
        let n = rev(&self.num, terms);
        let d = rev(&self.den, terms);
        let mut c = vec![0i128; terms];
        for k in 0..terms {
            let acc = n[k] - (1..=k).map(|j| d[j] * c[k - j]).sum::<i128>();
            c[k] = acc * lead;
        }
        Ok(c.into_iter()
            .enumerate()
            .map(|(k, v)| (top - k as i64, v))
            .collect())
    }

    /// Coefficient of `q^{q_degree}` in the expansion at infinity.
    pub fn leading(&self) -> Result<i128> {
        Ok(self.laurent(1)?.first().map_or(0, |&(_, c)| c))
    }
}

impl Add for &QRat {
    type Output = QRat;

    fn add(self, rhs: &QRat) -> QRat {
        QRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i128]) -> QPoly {
        QPoly::new(v.to_vec())
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[1, 2]);
        assert_eq!(a.to_string(), "2q+1");
        assert_eq!((&a * &a).coeffs(), &[1, 4, 4]);
        assert_eq!(QPoly::q_minus_one(2).to_string(), "q^2-1");
        assert_eq!((&a - &a), QPoly::zero());
        assert_eq!(a.eval(2), 5);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,2]");
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn laurent_expansion() {
        // (q+1)/(q-1)^2 = q^-1 + 3 q^-2 + 5 q^-3 + …
        let r = QRat::new(p(&[1, 1]), QPoly::q_minus_one(1).pow(2)).unwrap();
        assert_eq!(r.q_degree(), Some(-1));
        assert_eq!(r.laurent(3).unwrap(), vec![(-1, 1), (-2, 3), (-3, 5)]);
        let bad = QRat::new(p(&[1]), p(&[1, 2])).unwrap();
        assert_eq!(bad.leading(), Err(Error::NonMonic));
    }

    #[test]
    fn content_reduction() {
        let r = QRat::new(p(&[2, 4]), p(&[-2, -6])).unwrap();
        assert_eq!(r.num().coeffs(), &[-1, -2]);
        assert_eq!(r.den().coeffs(), &[1, 3]);
        assert_eq!(r.eval(1), Some((-3, 4)));
    }
}

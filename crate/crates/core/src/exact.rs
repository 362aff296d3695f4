//! Exact integer and rational combinatorics.
//!
//! Everything here is pure arbitrary-size arithmetic: binomials, signed
//! Stirling numbers of the first kind, rising factorials, harmonic numbers
//! and incomplete Bell polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Falling factorial `n (n-1) ... (n-k+1)` of a nonnegative integer.
pub fn falling_int(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (n - k + 1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// `(-1)^k` as an `i64`.
pub fn sign_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Binomial coefficient with an integer top argument that may be negative;
/// zero unless `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial(n as u64, k)
    }
}

/// Which recurrence an [`IntTriangleCache`] follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    Binomial,
    StirlingFirst,
}

/// Triangular integer table grown row by row on demand.
///
/// Row `n` holds `n + 1` entries. Rows are never modified once built.
#[derive(Debug, Clone)]
pub struct IntTriangleCache {
    kind: TriangleKind,
    rows: Vec<Vec<BigInt>>,
}

impl IntTriangleCache {
    pub fn new(kind: TriangleKind) -> Self {
        Self { kind, rows: vec![vec![BigInt::one()]] }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn row(&mut self, n: usize) -> &[BigInt] {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 always present");
            let r = prev.len() - 1;
            let mut next = vec![BigInt::zero(); r + 2];
            for k in 0..=r + 1 {
                let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                let here = prev.get(k).cloned().unwrap_or_default();
                next[k] = match self.kind {
                    TriangleKind::Binomial => left + here,
                    // s(r+1, k) = s(r, k-1) - r s(r, k)
                    TriangleKind::StirlingFirst => left - here * r,
                };
            }
            self.rows.push(next);
        }
        &self.rows[n]
    }

    /// Entry `(n, k)`; zero when `k > n`.
    pub fn get(&mut self, n: usize, k: usize) -> BigInt {
        self.row(n).get(k).cloned().unwrap_or_default()
    }
}

/// Signed Stirling number of the first kind `s(n, k)`.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    IntTriangleCache::new(TriangleKind::StirlingFirst).get(n, k)
}

/// Rising factorial `x (x+1) ... (x+n-1)`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

/// Harmonic number `H_m^{(r)} = sum_{j=1}^m j^{-r}`.
pub fn harmonic(m: usize, r: u32) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, j| acc + Rational::new(BigInt::one(), BigInt::from(j).pow(r)))
}

/// Full table `Y[a][b]` of incomplete Bell polynomials for `b <= a <= n`.
///
/// `x` must hold at least `n` values (`x[0]` is `x_1`); entries beyond what a
/// given `(a, b)` needs are ignored.
pub fn bell_table(n: usize, x: &[Rational]) -> Vec<Vec<Rational>> {
    let mut binom = IntTriangleCache::new(TriangleKind::Binomial);
    let mut y = vec![vec![Rational::zero(); n + 1]; n + 1];
    y[0][0] = Rational::one();
    for a in 1..=n {
        for b in 1..=a {
            let mut acc = Rational::zero();
            for j in 1..=a - b + 1 {
                let prev = &y[a - j][b - 1];
                if prev.is_zero() || x[j - 1].is_zero() {
                    continue;
                }
                let c = Rational::from_integer(binom.get(a - 1, j - 1));
                acc += c * &x[j - 1] * prev;
            }
            y[a][b] = acc;
        }
    }
    y
}

/// Incomplete Bell polynomial `Y_{n,k}(x_1, ..., x_{n-k+1})`.
pub fn bell_incomplete(n: usize, k: usize, x: &[Rational]) -> Result<Rational> {
    if k > n {
        return Err(Error::Param(format!("Bell index k = {k} exceeds n = {n}")));
    }
    let expected = n - k + 1;
    let empty_ok = n == 0 && k == 0 && x.is_empty();
    if x.len() != expected && !empty_ok {
        return Err(Error::LengthMismatch { expected, got: x.len() });
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    if k == 0 {
        return Ok(Rational::zero());
    }
    let mut padded = x.to_vec();
    padded.resize(n, Rational::zero());
    Ok(bell_table(n, &padded)[n][k].clone())
}

/// `|q|` for a rational, as an `f64` estimate of `log2`.
pub(crate) fn log2_abs(q: &Rational) -> f64 {
    if q.is_zero() {
        return f64::NEG_INFINITY;
    }
    let n = q.numer().abs();
    let d = q.denom().clone();
    log2_int(&n) - log2_int(&d)
}

fn log2_int(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 52 {
        return (n.to_string().parse::<f64>().unwrap_or(1.0)).log2();
    }
    let shift = bits - 52;
    let top: BigInt = n >> shift;
    (top.to_string().parse::<f64>().unwrap_or(1.0)).log2() + shift as f64
}

//! Linearity coefficients `c_{2i+1}^{(m)}` and `d_{2i}^{(m)}`.
//!
//! `C(k+m, k-m-1) = (1/(2m+1)!) sum_i c_{2i+1} k^{2i+1}` and
//! `C(k+m-1, k-m-1) + C(k+m, k-m) = (1/(2m)!) sum_i d_{2i} k^{2i}`.
//! Each route below computes the same numbers by a different formula.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bernoulli::{bernoulli_numbers, bernoulli_poly, reduced_even_values, reduced_odd_values};
use crate::error::{Error, Result};
use crate::exact::{factorial, harmonic, int, pochhammer, sign_pow, IntTriangleCache, Rational, TriangleKind};
use crate::ratpoly::RationalPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    BinomialExpansion,
    GenBernoulli,
    StirlingBernoulli,
    HarmonicClosedForm,
}

impl Route {
    pub const ALL: [Route; 4] =
        [Route::BinomialExpansion, Route::GenBernoulli, Route::StirlingBernoulli, Route::HarmonicClosedForm];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::BinomialExpansion => "binomial-expansion",
            Route::GenBernoulli => "gen-bernoulli",
            Route::StirlingBernoulli => "stirling-bernoulli",
            Route::HarmonicClosedForm => "harmonic-closed-form",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL.into_iter().find(|r| r.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown route `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffKind {
    C,
    D,
}

/// `values[i]` is `c_{2i+1}^{(m)}` or `d_{2i}^{(m)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffTable {
    pub m: usize,
    pub kind: CoeffKind,
    pub values: Vec<Rational>,
    pub route: Route,
}

impl CoeffTable {
    /// The polynomial in `k` that the table encodes, including the
    /// `1/(2m+1)!` or `1/(2m)!` prefactor.
    pub fn polynomial(&self) -> RationalPolynomial {
        let (scale, offset) = match self.kind {
            CoeffKind::C => (factorial(2 * self.m + 1), 1),
            CoeffKind::D => (factorial(2 * self.m), 0),
        };
        let inv = Rational::new(BigInt::one(), scale);
        let mut coeffs = vec![Rational::zero(); 2 * self.m + 2];
        for (i, v) in self.values.iter().enumerate() {
            coeffs[2 * i + offset] = v * &inv;
        }
        RationalPolynomial::new(coeffs)
    }
}

pub fn c_table(m: usize, route: Route) -> Result<CoeffTable> {
    let values = match route {
        Route::BinomialExpansion => {
            let p = odd_product(m);
            (0..=m).map(|i| p.coeff(2 * i + 1)).collect()
        }
        Route::GenBernoulli => {
            let r = reduced_even_values(2 * m, m);
            let top = factorial(2 * m + 1);
            (0..=m)
                .map(|i| {
                    let den = factorial(2 * i + 1) * factorial(2 * m - 2 * i);
                    Rational::new(top.clone(), den) * &r[2 * m - 2 * i]
                })
                .collect()
        }
        Route::StirlingBernoulli => {
            let mut st = IntTriangleCache::new(TriangleKind::StirlingFirst);
            (0..=m).map(|i| stirling_bernoulli_c(m, 2 * i + 1, &mut st)).collect()
        }
        Route::HarmonicClosedForm => {
            if m > 3 {
                return Err(Error::RouteUnsupported { route: route.as_str(), m });
            }
            harmonic_c_partial(m)
        }
    };
    Ok(CoeffTable { m, kind: CoeffKind::C, values, route })
}

pub fn d_table(m: usize, route: Route) -> Result<CoeffTable> {
    let values = match route {
        Route::BinomialExpansion => {
            let p = even_product(m);
            (0..=m).map(|i| p.coeff(2 * i)).collect()
        }
        Route::GenBernoulli => {
            let r = reduced_odd_values(2 * m, m);
            let top: BigInt = factorial(2 * m) * 2u32;
            (0..=m)
                .map(|i| {
                    let den = factorial(2 * i) * factorial(2 * m - 2 * i);
                    Rational::new(top.clone(), den) * &r[2 * m - 2 * i]
                })
                .collect()
        }
        Route::StirlingBernoulli => {
            let mut st = IntTriangleCache::new(TriangleKind::StirlingFirst);
            (0..=m).map(|i| stirling_bernoulli_d(m, 2 * i, &mut st)).collect()
        }
        Route::HarmonicClosedForm => {
            if m > 3 {
                return Err(Error::RouteUnsupported { route: route.as_str(), m });
            }
            harmonic_d_partial(m)
        }
    };
    Ok(CoeffTable { m, kind: CoeffKind::D, values, route })
}

// ---- Binomial expansion ----

/// `(k+m)(k+m-1)...(k-m)`.
fn odd_product(m: usize) -> RationalPolynomial {
    let m = m as i64;
    (-m..=m).fold(RationalPolynomial::one(), |acc, j| &acc * &RationalPolynomial::linear(int(j)))
}

/// `2k (k+m-1)...(k-m+1)`, or the constant 2 when `m = 0`.
fn even_product(m: usize) -> RationalPolynomial {
    if m == 0 {
        return RationalPolynomial::constant(int(2));
    }
    let m = m as i64;
    let base = RationalPolynomial::monomial(int(2), 1);
    (-(m - 1)..=m - 1).fold(base, |acc, j| &acc * &RationalPolynomial::linear(int(j)))
}

// ---- Stirling numbers and ordinary Bernoulli polynomials ----

/// Coefficient of `k^idx` in the falling factorial of `x = k + shift` of
/// length `len`, written through `s(len-1, j)` and `B_{j+1}`.
fn stirling_bernoulli_coeff(len: usize, shift: usize, idx: usize, st: &mut IntTriangleCache) -> Rational {
    let b = bernoulli_numbers(len + 1);
    let at = int(shift as i64);
    let mut acc = Rational::zero();
    for j in idx.saturating_sub(1)..len {
        let s = st.get(len - 1, j);
        if s.is_zero() {
            continue;
        }
        let deriv = j + 1 - idx;
        let mut bern = bernoulli_poly(deriv).eval(&at);
        if idx == 0 {
            bern -= &b[j + 1];
        }
        let rising = pochhammer(&int((j + 2 - idx) as i64), idx);
        acc += Rational::new(BigInt::from(len), BigInt::from(j + 1)) * Rational::from_integer(s) * rising * bern;
    }
    acc / Rational::from_integer(factorial(idx))
}

/// `c_idx^{(m)}` from the Stirling/Bernoulli expansion of `(k+m)_{2m+1}`.
pub fn stirling_bernoulli_c(m: usize, idx: usize, st: &mut IntTriangleCache) -> Rational {
    stirling_bernoulli_coeff(2 * m + 1, m, idx, st)
}

/// `d_idx^{(m)}` for even `idx`, as twice the coefficient of the falling
/// factorial of `k + m` of length `2m`.
pub fn stirling_bernoulli_d(m: usize, idx: usize, st: &mut IntTriangleCache) -> Rational {
    if m == 0 {
        return if idx == 0 { int(2) } else { Rational::zero() };
    }
    stirling_bernoulli_coeff(2 * m, m, idx, st) * int(2)
}

// ---- Harmonic closed forms ----

fn fact_sq(n: usize) -> Rational {
    let f = factorial(n);
    Rational::from_integer(&f * &f)
}

/// `c_{2i+1}^{(m)}` in closed harmonic form, available for `i <= min(m, 3)`.
pub fn harmonic_c_entry(m: usize, i: usize) -> Option<Rational> {
    if i > m || i > 3 {
        return None;
    }
    let h2 = harmonic(m, 2);
    let h4 = harmonic(m, 4);
    let h6 = harmonic(m, 6);
    let sym = match i {
        0 => int(1),
        1 => h2,
        2 => (&h2 * &h2 - &h4) / int(2),
        _ => (&h2 * &h2 * &h2 - int(3) * &h2 * &h4 + int(2) * &h6) / int(6),
    };
    Some(int(sign_pow(m + i)) * fact_sq(m) * sym)
}

/// `d_{2i}^{(m)}` in closed harmonic form, available for `i <= min(m, 3)`.
pub fn harmonic_d_entry(m: usize, i: usize) -> Option<Rational> {
    if i > m || i > 3 {
        return None;
    }
    if i == 0 {
        return Some(if m == 0 { int(2) } else { Rational::zero() });
    }
    let h2 = harmonic(m - 1, 2);
    let h4 = harmonic(m - 1, 4);
    let sym = match i {
        1 => int(2),
        2 => int(2) * h2,
        _ => &h2 * &h2 - h4,
    };
    Some(int(sign_pow(m + i)) * fact_sq(m - 1) * sym)
}

/// Leading `c` entries covered by the closed forms.
pub fn harmonic_c_partial(m: usize) -> Vec<Rational> {
    (0..=m.min(3)).filter_map(|i| harmonic_c_entry(m, i)).collect()
}

/// Leading `d` entries covered by the closed forms.
pub fn harmonic_d_partial(m: usize) -> Vec<Rational> {
    (0..=m.min(3)).filter_map(|i| harmonic_d_entry(m, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial_signed;

    #[test]
    fn small_c_tables() {
        let t = c_table(1, Route::BinomialExpansion).unwrap();
        assert_eq!(t.values, vec![int(-1), int(1)]);
        let t = c_table(2, Route::BinomialExpansion).unwrap();
        assert_eq!(t.values, vec![int(4), int(-5), int(1)]);
    }

    #[test]
    fn small_d_tables() {
        assert_eq!(d_table(0, Route::BinomialExpansion).unwrap().values, vec![int(2)]);
        assert_eq!(d_table(1, Route::BinomialExpansion).unwrap().values, vec![int(0), int(2)]);
    }

    #[test]
    fn routes_agree_small() {
        for m in 0..8 {
            let c0 = c_table(m, Route::BinomialExpansion).unwrap().values;
            let d0 = d_table(m, Route::BinomialExpansion).unwrap().values;
            for r in [Route::GenBernoulli, Route::StirlingBernoulli] {
                assert_eq!(c_table(m, r).unwrap().values, c0, "c m={m} {r}");
                assert_eq!(d_table(m, r).unwrap().values, d0, "d m={m} {r}");
            }
            assert_eq!(harmonic_c_partial(m)[..], c0[..=m.min(3)]);
            assert_eq!(harmonic_d_partial(m)[..], d0[..=m.min(3)]);
        }
    }

    #[test]
    fn harmonic_route_coverage() {
        assert!(c_table(3, Route::HarmonicClosedForm).is_ok());
        assert_eq!(
            c_table(4, Route::HarmonicClosedForm),
            Err(Error::RouteUnsupported { route: "harmonic-closed-form", m: 4 })
        );
        assert!(d_table(9, Route::HarmonicClosedForm).is_err());
    }

    #[test]
    fn leading_c_is_one_and_first_is_factorial_square() {
        for m in 0..10 {
            let t = c_table(m, Route::BinomialExpansion).unwrap();
            assert_eq!(t.values[m], int(1));
            assert_eq!(t.values[0], int(sign_pow(m)) * fact_sq(m));
        }
    }

    #[test]
    fn reconstruction_on_integers() {
        for m in 0..7usize {
            let c = c_table(m, Route::GenBernoulli).unwrap().polynomial();
            let d = d_table(m, Route::GenBernoulli).unwrap().polynomial();
            for k in 1..=(3 * m as i64 + 3) {
                let mi = m as i64;
                let kr = int(k);
                assert_eq!(c.eval(&kr), Rational::from_integer(binomial_signed(k + mi, k - mi - 1)));
                let comb = binomial_signed(k + mi - 1, k - mi - 1) + binomial_signed(k + mi, k - mi);
                assert_eq!(d.eval(&kr), Rational::from_integer(comb));
            }
            assert!(c.is_odd());
            assert!(d.is_even());
        }
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.as_str().parse::<Route>().unwrap(), r);
        }
        assert!("nope".parse::<Route>().is_err());
    }
}

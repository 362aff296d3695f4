//! Polynomial families attached to the hyperbolic series.
//!
//! All constructions are exact; `(2 pi i)^{2k}` is expanded to
//! `(-1)^k 4^k pi^{2k}` so no complex symbol is ever needed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bernoulli::{bernoulli_numbers, bernoulli_poly_eval, gen_bernoulli_values, reduced_even_values};
use crate::coefficients::{c_table, d_table, Route};
use crate::error::{Error, Result};
use crate::exact::{bell_table, binomial, factorial, int, rat, sign_pow, Rational};
use crate::pipoly::{PiNumber, PiPolynomial};

fn pow2(e: usize) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

fn inv_fact(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// `-2^{2m+1} sum_k (2 pi i)^{2k} B_{2k}/(2k)! * inner[2m+2-2k]/(2m+2-2k)! * phi^{2m+2-2k}`.
fn bernoulli_convolution(m: usize, inner: &[Rational]) -> PiPolynomial {
    let b = bernoulli_numbers(2 * m + 2);
    let pre = -pow2(2 * m + 1);
    let mut out = PiPolynomial::zero();
    for k in 0..=m + 1 {
        let j = 2 * m + 2 - 2 * k;
        let c = &pre * int(sign_pow(k)) * pow2(2 * k) * &b[2 * k] * inv_fact(2 * k) * &inner[j] * inv_fact(j);
        out.add_term(j as i32, 2 * k as i32, c);
    }
    out
}

/// The polynomial `B_{2m+2}(phi)` of the hyperbolic functional equation.
#[allow(non_snake_case)]
pub fn calB(m: usize) -> PiPolynomial {
    bernoulli_convolution(m, &reduced_even_values(2 * m + 2, m))
}

/// `B_{2m+2}(phi)` rebuilt from the residue expansion: Bernoulli values at
/// `1/2` fed through incomplete Bell polynomials.
#[allow(non_snake_case)]
pub fn calB_residue(m: usize) -> PiPolynomial {
    let n = 2 * m + 2;
    let b = bernoulli_numbers(n);
    let half = rat(1, 2);
    let x: Vec<Rational> = (1..=n).map(|j| bernoulli_poly_eval(j, &half)).collect();
    let y = bell_table(n, &x);
    let pre = -pow2(2 * m + 1);
    let mut out = PiPolynomial::zero();
    for k in (0..=n).step_by(2) {
        let inner = residue_inner(&y, n, k);
        let c = &pre
            * Rational::from_integer(binomial(n as u64, k as i64))
            * int(sign_pow(k / 2))
            * pow2(k)
            * &b[k]
            * inner;
        out.add_term((n - k) as i32, k as i32, c);
    }
    out
}

/// `sum_{s=0}^{n-k} Y_{n-k,s}(B_1(1/2), ...)/(n-s)!`.
fn residue_inner(y: &[Vec<Rational>], n: usize, k: usize) -> Rational {
    (0..=n - k).map(|s| &y[n - k][s] * inv_fact(n - s)).fold(Rational::zero(), |a, t| a + t)
}

/// Residue inner sum for the (odd) index `k`; vanishes identically, which
/// is why the residue expansion has no imaginary part.
pub fn residue_odd_inner(m: usize, k: usize) -> Rational {
    let n = 2 * m + 2;
    let half = rat(1, 2);
    let x: Vec<Rational> = (1..=n).map(|j| bernoulli_poly_eval(j, &half)).collect();
    residue_inner(&bell_table(n, &x), n, k)
}

/// The small-`phi` asymptotic polynomial of `S_{2m+2}`.
#[allow(non_snake_case)]
pub fn calA(m: usize) -> PiPolynomial {
    let b = bernoulli_numbers(2 * m + 2);
    let r = reduced_even_values(2 * m, m);
    let mut out = PiPolynomial::zero();
    for i in 0..=m {
        let c = pow2(2 * m + 1) * &b[2 * i + 2] * inv_fact(2 * i + 2) * &r[2 * m - 2 * i] * inv_fact(2 * m - 2 * i);
        out.add_term(2 * m as i32 + 2, 0, c.clone());
        // -(2 pi i)^{2i+2} = (-1)^i 4^{i+1} pi^{2i+2}
        let pi_part = c * int(sign_pow(i)) * pow2(2 * i + 2);
        out.add_term((2 * m - 2 * i) as i32, (2 * i + 2) as i32, pi_part);
    }
    out
}

/// Ramanujan polynomial `R_{2m+2}(phi)`.
pub fn ramanujan(m: usize) -> PiPolynomial {
    bernoulli_convolution(m, &bernoulli_numbers(2 * m + 2))
}

/// Generalized Ramanujan polynomial with inner factors `B^{(2s+r)}_j(s)`.
pub fn gen_ramanujan(m: usize, s: usize, r: i64) -> Result<PiPolynomial> {
    let order = 2 * s as i64 + r;
    if order < 0 {
        return Err(Error::Param(format!("2s + r = {order} must be nonnegative")));
    }
    let inner = gen_bernoulli_values(2 * m + 2, order as usize, &int(s as i64));
    Ok(bernoulli_convolution(m, &inner))
}

/// Inversion numbers `frak_B_k^{(i)}` for `k = 0..=i`.
pub fn frak_b(i: usize) -> Vec<PiNumber> {
    frak_b_all(i).pop().expect("nonempty")
}

/// All rows `frak_b(0), ..., frak_b(n)`.
///
/// Row `i` is row `i` of the inverse of the lower-triangular matrix
/// `M_{k,j} = (8 pi^2)^{2k+2} c_{2j+1}^{(k)} / (2k+1)!`.
pub fn frak_b_all(n: usize) -> Vec<Vec<PiNumber>> {
    let eight = int(8);
    let mat: Vec<Vec<(Rational, i32)>> = (0..=n)
        .map(|k| {
            let c = c_table(k, Route::BinomialExpansion).expect("binomial route is total");
            let scale = num_traits::pow(eight.clone(), 2 * k + 2) * inv_fact(2 * k + 1);
            c.values.iter().map(|v| (v * &scale, (4 * k + 4) as i32)).collect()
        })
        .collect();
    (0..=n)
        .map(|i| {
            let mut row = vec![PiNumber::zero(); i + 1];
            for j in (0..=i).rev() {
                let mut acc = if i == j { PiNumber::one() } else { PiNumber::zero() };
                for k in j + 1..=i {
                    let (c, b) = &mat[k][j];
                    acc = &acc - &row[k].scale(c).div_monomial(&Rational::one(), -b).expect("unit");
                }
                let (c, b) = &mat[j][j];
                row[j] = acc.div_monomial(c, *b).expect("nonzero diagonal");
            }
            row
        })
        .collect()
}

/// Transformation polynomials `S_k^{(m)}(phi)` for `k = 0..=m`, so that
/// `S_{2m+2}(phi) - sum_k S_k^{(m)}(phi) S_{2k+2}(4 pi^2/phi)` is a polynomial.
#[allow(non_snake_case)]
pub fn calS(m: usize) -> Vec<PiPolynomial> {
    let fb = frak_b_all(m);
    let c = c_table(m, Route::BinomialExpansion).expect("binomial route is total");
    let pre = -pow2(2 * m + 2) * inv_fact(2 * m + 1);
    (0..=m)
        .map(|k| {
            let mut poly = PiPolynomial::zero();
            for (i, (ci, row)) in c.values.iter().zip(&fb).enumerate().skip(k) {
                let base = &pre * ci * int(sign_pow(i)) * pow2(2 * i + 2);
                let phi_pow = (2 * m + 2 - 2 * i + 2 * k) as i32;
                for (b, coeff) in row[k].terms() {
                    poly.add_term(phi_pow, b + (2 * i + 2) as i32, &base * coeff);
                }
            }
            poly
        })
        .collect()
}

/// Coefficient `kappa_m` of the odd monomial `sigma * kappa_m * phi^{2m+1}`
/// left over in the functional equation of `S_{2m+2}`.
///
/// It comes from the `-1/(2 phi)` part of the first Lambert series:
/// `kappa_m = -2^{2m+1} B^{(2m+2)}_{2m}(m+1) / (2m)!`, which reduces to
/// `(-1)^{m+1} 2^{2m+1} (m!)^2 / (2m+1)!`.
pub fn odd_power_coefficient(m: usize) -> Rational {
    let r = reduced_even_values(2 * m, m);
    -pow2(2 * m + 1) * &r[2 * m] * inv_fact(2 * m)
}

// ---- Truncated asymptotics of the sinh-weighted series ----

/// Formal symbols that appear in the sinh asymptotic expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symbol {
    One,
    /// `zeta(s)` for odd `s >= 3`.
    Zeta(u32),
    EulerGamma,
    LogPhi,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::One => write!(f, "1"),
            Symbol::Zeta(s) => write!(f, "zeta({s})"),
            Symbol::EulerGamma => write!(f, "gamma"),
            Symbol::LogPhi => write!(f, "log(phi)"),
        }
    }
}

/// `sum c phi^a * symbol` with exact rational `c`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicPolynomial {
    terms: BTreeMap<(i32, Symbol), Rational>,
}

impl SymbolicPolynomial {
    pub fn add_term(&mut self, a: i32, sym: Symbol, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, sym)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, sym));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, Symbol, &Rational)> {
        self.terms.iter().map(|((a, s), c)| (*a, *s, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms carrying a polygamma-at-one value (`zeta` or `gamma`).
    pub fn polygamma_terms(&self) -> usize {
        self.terms.keys().filter(|(_, s)| matches!(s, Symbol::Zeta(_) | Symbol::EulerGamma)).count()
    }
}

impl fmt::Display for SymbolicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((a, s), c)| match s {
                Symbol::One => format!("{c}\u{b7}phi^{a}"),
                _ => format!("{c}\u{b7}{s}\u{b7}phi^{a}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Truncation of the small-`phi` expansion of `S^{(sinh,1)}_{2m+2}` keeping
/// the Bernoulli tail terms with `k <= k_trunc`.
///
/// For `m = 0` the `k = 0` tail term is singular; it is replaced by the
/// logarithmic leading behaviour `phi log(phi) - phi^2/4` of the
/// `q`-digamma function.
pub fn a_sinh_trunc(m: usize, k_trunc: usize) -> SymbolicPolynomial {
    let d = d_table(m, Route::BinomialExpansion).expect("binomial route is total");
    let b = bernoulli_numbers(2 * m + 2 * k_trunc + 2);
    let pre = -pow2(2 * m + 1) * inv_fact(2 * m);
    let mut out = SymbolicPolynomial::default();
    for (i, di) in d.values.iter().enumerate() {
        if di.is_zero() {
            continue;
        }
        let w = &pre * di;
        let a = (2 * m + 1 - 2 * i) as i32;
        // psi^{(2i)}(1): -gamma for i = 0, -(2i)! zeta(2i+1) otherwise
        if i == 0 {
            out.add_term(a, Symbol::EulerGamma, -w.clone());
        } else {
            let z = -Rational::from_integer(factorial(2 * i));
            out.add_term(a, Symbol::Zeta(2 * i as u32 + 1), &w * z);
        }
        for k in 0..=k_trunc {
            let a = (2 * m + 2 * k + 1) as i32;
            if i == 0 && k == 0 {
                out.add_term(a, Symbol::LogPhi, w.clone());
                out.add_term(a + 1, Symbol::One, &w * rat(-1, 4));
                continue;
            }
            let c =
                &b[2 * i + 2 * k] * &b[2 * k] / Rational::from_integer(BigInt::from(2 * i + 2 * k) * factorial(2 * k));
            out.add_term(a, Symbol::One, &w * c);
        }
    }
    out
}

/// Convert a [`SymbolicPolynomial`] with only rational terms into a
/// [`PiPolynomial`].
pub fn symbolic_to_pi(p: &SymbolicPolynomial) -> Option<PiPolynomial> {
    let mut out = PiPolynomial::zero();
    for (a, s, c) in p.terms() {
        if s != Symbol::One {
            return None;
        }
        out.add_term(a, 0, c.clone());
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i32, i32, i64, i64)]) -> PiPolynomial {
        let mut p = PiPolynomial::zero();
        for &(a, b, n, d) in terms {
            p.add_term(a, b, rat(n, d));
        }
        p
    }

    #[test]
    fn calb_small() {
        assert_eq!(calB(0), poly(&[(2, 0, 1, 6), (0, 2, 2, 3)]));
        assert_eq!(calB(1), poly(&[(4, 0, -11, 90), (2, 2, -4, 9), (0, 4, 8, 45)]));
    }

    #[test]
    fn ramanujan_small() {
        assert_eq!(ramanujan(0), poly(&[(2, 0, -1, 6), (0, 2, 2, 3)]));
        for m in 0..5 {
            assert_eq!(gen_ramanujan(m, 0, 1).unwrap(), ramanujan(m));
            assert_eq!(gen_ramanujan(m, m + 1, 0).unwrap(), calB(m));
        }
        assert_eq!(gen_ramanujan(0, 2, 3).unwrap().phi_degree(), Some(2));
        assert!(gen_ramanujan(1, 0, -1).is_err());
    }

    #[test]
    fn cala_equals_calb_small() {
        for m in 0..6 {
            assert_eq!(calA(m), calB(m));
        }
    }

    #[test]
    fn residue_route_equals_calb() {
        for m in 0..6 {
            assert_eq!(calB_residue(m), calB(m), "m = {m}");
            assert!(residue_odd_inner(m, 1).is_zero());
        }
    }

    #[test]
    fn frak_b_first_rows() {
        let r0 = frak_b(0);
        assert_eq!(r0, vec![PiNumber::monomial(rat(1, 64), -4)]);
        let r1 = frak_b(1);
        assert_eq!(r1[0], PiNumber::monomial(rat(1, 64), -4));
        assert_eq!(r1[1], PiNumber::monomial(rat(3, 2048), -8));
    }

    #[test]
    fn cals_first_rows() {
        assert_eq!(calS(0), vec![poly(&[(2, -2, -1, 4)])]);
        let s1 = calS(1);
        assert_eq!(s1[0], poly(&[(4, -2, 1, 6), (2, 0, 2, 3)]));
        assert_eq!(s1[1], poly(&[(4, -4, 1, 16)]));
    }

    #[test]
    fn sinh_truncation_shapes() {
        let a = a_sinh_trunc(1, 2);
        assert_eq!(a.polygamma_terms(), 1);
        assert!(a.terms().all(|(p, _, _)| p % 2 == 1));
        let a0 = a_sinh_trunc(0, 0);
        let lowest = a0.terms().map(|(p, _, _)| p).min().unwrap();
        assert_eq!(lowest, 1);
    }
    #[test]
    fn odd_power_coefficient_closed_form() {
        let first = [rat(-2, 1), rat(4, 3), rat(-16, 15), rat(32, 35)];
        for (m, want) in first.iter().enumerate() {
            assert_eq!(&odd_power_coefficient(m), want);
        }
        for m in 0..15 {
            let f = Rational::from_integer(factorial(m));
            let closed = int(-sign_pow(m)) * pow2(2 * m + 1) * &f * &f * inv_fact(2 * m + 1);
            assert_eq!(odd_power_coefficient(m), closed, "m = {m}");
        }
    }
}

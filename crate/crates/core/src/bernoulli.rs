//! Bernoulli numbers, Bernoulli polynomials and generalized (Nörlund)
//! Bernoulli polynomials in exact arithmetic.
//!
//! Convention: `B_1 = -1/2`, i.e. the coefficients of `x/(e^x - 1)`.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bell_table, binomial, factorial, falling_int, int, rat, Rational};
use crate::ratpoly::RationalPolynomial;

thread_local! {
    static BERNOULLI: RefCell<Vec<Rational>> = RefCell::new(vec![Rational::one()]);
}

/// `B_0, ..., B_n`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    BERNOULLI.with(|cell| {
        let mut b = cell.borrow_mut();
        while b.len() <= n {
            let k = b.len();
            // sum_{j=0}^{k} C(k+1, j) B_j = 0
            let mut acc = Rational::zero();
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += Rational::from_integer(binomial(k as u64 + 1, j as i64)) * bj;
                }
            }
            let next = -acc / Rational::from_integer(BigInt::from(k + 1));
            b.push(next);
        }
        b[..=n].to_vec()
    })
}

pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_numbers(n).pop().expect("nonempty")
}

/// `B_n(t) = sum_k C(n,k) B_k t^{n-k}`.
pub fn bernoulli_poly(n: usize) -> RationalPolynomial {
    let b = bernoulli_numbers(n);
    let coeffs = (0..=n).map(|p| Rational::from_integer(binomial(n as u64, p as i64)) * &b[n - p]).collect();
    RationalPolynomial::new(coeffs)
}

pub fn bernoulli_poly_eval(n: usize, t: &Rational) -> Rational {
    bernoulli_poly(n).eval(t)
}

// ---- Truncated power series ----

fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn series_pow(base: &[Rational], mut e: usize, len: usize) -> Vec<Rational> {
    let mut result = vec![Rational::zero(); len];
    result[0] = Rational::one();
    let mut sq = base.to_vec();
    sq.resize(len, Rational::zero());
    while e > 0 {
        if e & 1 == 1 {
            result = series_mul(&result, &sq, len);
        }
        e >>= 1;
        if e > 0 {
            sq = series_mul(&sq, &sq, len);
        }
    }
    result
}

/// Coefficients `B_k / k!` of `x/(e^x - 1)` up to `x^n`.
fn bernoulli_egf(n: usize) -> Vec<Rational> {
    bernoulli_numbers(n).into_iter().enumerate().map(|(k, b)| b / Rational::from_integer(factorial(k))).collect()
}

/// `B_k^{(order)}(t)` for every `k <= n`.
pub fn gen_bernoulli_values(n: usize, order: usize, t: &Rational) -> Vec<Rational> {
    let len = n + 1;
    let powered = series_pow(&bernoulli_egf(n), order, len);
    let mut shift = Vec::with_capacity(len);
    let mut term = Rational::one();
    for k in 0..len {
        shift.push(term.clone());
        term = term * t / Rational::from_integer(BigInt::from(k + 1));
    }
    series_mul(&powered, &shift, len)
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * Rational::from_integer(factorial(k)))
        .collect()
}

/// Generalized Bernoulli polynomial `B_n^{(order)}(t)`.
pub fn gen_bernoulli_poly(n: usize, order: usize, t: &Rational) -> Rational {
    gen_bernoulli_values(n, order, t).pop().expect("nonempty")
}

/// `B_n^{(order)}(t)` as a polynomial in `t`.
pub fn gen_bernoulli_polynomial(n: usize, order: usize) -> RationalPolynomial {
    let at_zero = gen_bernoulli_values(n, order, &Rational::zero());
    let coeffs = (0..=n).map(|p| Rational::from_integer(binomial(n as u64, p as i64)) * &at_zero[n - p]).collect();
    RationalPolynomial::new(coeffs)
}

// ---- Reduced families ----

/// `B_k^{(2m+2)}(m+1)` for every `k <= n`.
pub fn reduced_even_values(n: usize, m: usize) -> Vec<Rational> {
    gen_bernoulli_values(n, 2 * m + 2, &int(m as i64 + 1))
}

/// `B_k^{(2m+1)}(m)` for every `k <= n`.
pub fn reduced_odd_values(n: usize, m: usize) -> Vec<Rational> {
    gen_bernoulli_values(n, 2 * m + 1, &int(m as i64))
}

/// `B_n^{(2m+2)}(m+1)`.
pub fn reduced_even(n: usize, m: usize) -> Rational {
    reduced_even_values(n, m).pop().expect("nonempty")
}

/// `B_n^{(2m+1)}(m)`.
pub fn reduced_odd(n: usize, m: usize) -> Rational {
    reduced_odd_values(n, m).pop().expect("nonempty")
}

/// `B_n^{(2m+2)}(m+1)` assembled from ordinary Bernoulli values at `1/2`
/// through incomplete Bell polynomials.
pub fn gen_bernoulli_via_bell(n: usize, m: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Param("the Bell-polynomial route needs n >= 1".into()));
    }
    let half = rat(1, 2);
    let x: Vec<Rational> = (1..=n).map(|j| bernoulli_poly_eval(j, &half)).collect();
    let y = bell_table(n, &x);
    let top = 2 * m + 2;
    let mut acc = Rational::zero();
    for (s, ys) in y[n].iter().enumerate().skip(1) {
        if ys.is_zero() {
            continue;
        }
        acc += Rational::from_integer(falling_int(top, s)) * ys;
    }
    Ok(acc)
}

/// `Gamma(z + alpha) / Gamma(z - beta)` expanded as a polynomial in `z`
/// through generalized Bernoulli values of order `1 + alpha + beta`.
pub fn gamma_ratio_poly(alpha: usize, beta: usize) -> RationalPolynomial {
    let n = alpha + beta;
    let vals = gen_bernoulli_values(n, n + 1, &int(alpha as i64));
    let nf = factorial(n);
    let coeffs = (0..=n)
        .map(|i| {
            let den = factorial(i) * factorial(n - i);
            Rational::new(nf.clone(), den) * &vals[n - i]
        })
        .collect();
    RationalPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_number_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        assert_eq!(bernoulli_number(20), rat(-174611, 330));
    }

    #[test]
    fn bernoulli_polynomial_values() {
        let half = rat(1, 2);
        assert_eq!(bernoulli_poly_eval(1, &half), int(0));
        assert_eq!(bernoulli_poly_eval(2, &half), rat(-1, 12));
        assert_eq!(bernoulli_poly(0), RationalPolynomial::one());
        assert_eq!(bernoulli_poly(2).to_string(), "z^2 - z + 1/6");
    }

    #[test]
    fn generalized_values() {
        assert_eq!(gen_bernoulli_poly(0, 5, &rat(7, 3)), int(1));
        assert_eq!(gen_bernoulli_poly(2, 4, &int(2)), rat(-1, 3));
        assert_eq!(gen_bernoulli_poly(2, 3, &int(1)), int(0));
        // order one reduces to the ordinary polynomials
        for n in 0..10 {
            assert_eq!(gen_bernoulli_poly(n, 1, &rat(2, 5)), bernoulli_poly_eval(n, &rat(2, 5)));
        }
        // order zero is the shift series t^n
        assert_eq!(gen_bernoulli_poly(3, 0, &int(2)), int(8));
    }

    #[test]
    fn reduced_values() {
        assert_eq!(reduced_even(4, 2), rat(4, 5));
        assert_eq!(reduced_even(4, 1), rat(11, 30));
        assert_eq!(reduced_odd(4, 2), int(0));
        assert_eq!(reduced_odd(1, 0), rat(-1, 2));
        assert_eq!(reduced_even(3, 2), int(0));
    }

    #[test]
    fn bell_route_examples() {
        assert_eq!(gen_bernoulli_via_bell(2, 0).unwrap(), rat(-1, 6));
        assert_eq!(gen_bernoulli_via_bell(1, 3).unwrap(), int(0));
        assert_eq!(gen_bernoulli_via_bell(4, 1).unwrap(), rat(11, 30));
        assert!(gen_bernoulli_via_bell(0, 1).is_err());
    }

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(gamma_ratio_poly(1, 0), RationalPolynomial::monomial(int(1), 1));
        assert_eq!(gamma_ratio_poly(2, 1).to_string(), "z^3 - z");
        for m in 0..6 {
            assert!(gamma_ratio_poly(m + 1, m).is_odd());
        }
    }
}

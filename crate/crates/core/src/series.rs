//! Guaranteed-precision evaluation of the hyperbolic and Lambert series and
//! of the constants they are compared against.
//!
//! Every series is summed in exponential form with `Q_n = e^{-n u}`,
//! `u = sigma phi`, `sigma = sgn Re(phi)`. The reported tail bound is a
//! geometric majorant of the omitted terms, computed in the `log2` domain.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_number, bernoulli_numbers};
use crate::bigc::{check_prec, int_f, log2_abs, pi, rational_to_float, to_f64, with_consts, zero_f, BigComplex, RM};
use crate::coefficients::{c_table, d_table, Route};
use crate::error::{Error, Result};
use crate::exact::{binomial_signed, factorial, harmonic, pochhammer, sign_pow, Rational};
use crate::pipoly::{PiNumber, PiPolynomial};
use crate::polynomials::{Symbol, SymbolicPolynomial};

/// Guard bits added to every requested precision.
pub const GUARD_BITS: usize = 32;

/// Default hard cap on the number of summed terms.
pub const DEFAULT_TERM_CAP: usize = 10_000_000;

/// Environment variable overriding [`DEFAULT_TERM_CAP`].
pub const TERM_CAP_ENV: &str = "HYPSERIES_MAX_TERMS";

/// Resync interval of the multiplicative `Q_n` recurrence.
const RESYNC: usize = 64;

pub fn term_cap() -> usize {
    std::env::var(TERM_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_TERM_CAP)
}

fn working(prec: usize) -> usize {
    prec + GUARD_BITS
}

/// A series value with a bound on the omitted tail.
#[derive(Debug, Clone)]
pub struct SeriesValue {
    pub value: BigComplex,
    /// `log2` of the proven tail bound (`-inf` for an exact finite sum).
    pub tail_log2: f64,
    pub terms_used: usize,
}

impl SeriesValue {
    /// The tail bound as an `f64`; underflows to zero below `2^-1074`.
    pub fn tail_bound(&self) -> f64 {
        self.tail_log2.exp2()
    }

    fn scaled(self, factor: &BigComplex) -> Self {
        let tail_log2 = self.tail_log2 + factor.log2_abs();
        Self { value: &self.value * factor, tail_log2, terms_used: self.terms_used }
    }
}

// ---- Branch data ----

struct Branch {
    sigma: i32,
    /// `sigma * phi`, with positive real part.
    u: BigComplex,
    re_u: f64,
}

fn branch(phi: &BigComplex, w: usize) -> Result<Branch> {
    if phi.re().is_zero() {
        return Err(Error::Domain("the series diverges on the imaginary axis (Re(phi) = 0)".into()));
    }
    let sigma = if phi.re().is_negative() { -1 } else { 1 };
    let u = if sigma < 0 { -phi } else { phi.clone() }.with_prec(w);
    let re_u = to_f64(u.re());
    Ok(Branch { sigma, u, re_u })
}

/// `log2(1 - e^{-t})` for `t > 0`.
fn log2_one_minus_exp(t: f64) -> f64 {
    (-(-t).exp_m1()).log2()
}

/// Iterator over `Q_n = e^{-n u}` with periodic exact resync.
struct QPowers {
    u: BigComplex,
    q1: BigComplex,
    cur: BigComplex,
    n: usize,
}

impl QPowers {
    fn new(u: &BigComplex) -> Self {
        let q1 = (-u).exp();
        Self { u: u.clone(), cur: BigComplex::one(u.prec()), q1, n: 0 }
    }

    fn next(&mut self) -> &BigComplex {
        self.n += 1;
        self.cur = if self.n % RESYNC == 0 {
            let t = self.u.scale(&int_f(self.n as i64, self.u.prec()));
            (-&t).exp()
        } else {
            &self.cur * &self.q1
        };
        &self.cur
    }
}

fn stop_reached(tail_log2: f64, sum: &BigComplex, w: usize) -> bool {
    tail_log2 < sum.log2_abs() - (w as f64 + 16.0) || (sum.is_zero() && tail_log2 < -(w as f64))
}

fn cap_error(n: usize) -> Error {
    Error::Precision(format!(
        "term cap of {n} reached before the tail bound met the target (set {TERM_CAP_ENV} to raise it)"
    ))
}

// ---- Hyperbolic kernels ----

/// `T(Q) = Q^a (1 + eps Q^2)^g / (1 - Q)^b`.
#[derive(Debug, Clone, Copy)]
struct Kernel {
    a: u32,
    eps: i32,
    g: i64,
    b: u32,
}

impl Kernel {
    fn eval(&self, q: &BigComplex) -> BigComplex {
        let one = BigComplex::one(q.prec());
        let mut num = q.powi(self.a as i64);
        if self.g != 0 && self.eps != 0 {
            let q2 = q * q;
            let f = if self.eps > 0 { &one + &q2 } else { &one - &q2 };
            num = &num * &f.powi(self.g);
        }
        let den = (&one - q).powi(self.b as i64);
        &num / &den
    }

    /// `log2` of a bound on `sum_{n > n_done} |T(Q_n)|`.
    fn tail_log2(&self, n_done: usize, re_u: f64) -> f64 {
        let t = (n_done + 1) as f64 * re_u;
        let log2x = -t * std::f64::consts::LOG2_E;
        let x = log2x.exp2();
        let mut h = -(self.b as f64) * log2_one_minus_exp(t);
        if self.eps != 0 && self.g != 0 {
            h += if self.g > 0 {
                self.g as f64 * (1.0 + x * x).log2()
            } else {
                self.g as f64 * log2_one_minus_exp(2.0 * t)
            };
        }
        self.a as f64 * log2x + h - log2_one_minus_exp(self.a as f64 * re_u) + 1.0
    }
}

/// `sum_{n >= 1} T(Q_n)` at working precision `w`, either until the tail
/// bound meets the target or over exactly `fixed` terms.
fn sum_kernel(k: Kernel, br: &Branch, w: usize, fixed: Option<usize>) -> Result<(BigComplex, f64, usize)> {
    debug_assert!(k.a >= 1);
    let cap = term_cap();
    if fixed == Some(0) {
        return Ok((BigComplex::zero(w), k.tail_log2(0, br.re_u), 0));
    }
    let mut qs = QPowers::new(&br.u);
    let mut sum = BigComplex::zero(w);
    loop {
        let q = qs.next().clone();
        sum = &sum + &k.eval(&q);
        let n = qs.n;
        let tail = k.tail_log2(n, br.re_u);
        if let Some(f) = fixed {
            if n >= f {
                return Ok((sum, tail, n));
            }
            continue;
        }
        if stop_reached(tail, &sum, w) {
            return Ok((sum, tail, n));
        }
        if n >= cap {
            return Err(cap_error(n));
        }
    }
}

fn pow2_f(e: i64, w: usize) -> BigComplex {
    let two = BigComplex::from_i64(2, w);
    two.powi(e)
}

fn hyperbolic(m: usize, k: Kernel, constant: BigComplex, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    hyperbolic_terms(m, k, constant, phi, prec, None)
}

fn hyperbolic_terms(
    m: usize,
    k: Kernel,
    constant: BigComplex,
    phi: &BigComplex,
    prec: usize,
    fixed: Option<usize>,
) -> Result<SeriesValue> {
    check_prec(prec)?;
    let w = working(prec);
    let br = branch(phi, w)?;
    let (sum, tail, n) = sum_kernel(k, &br, w, fixed)?;
    let factor = &constant * &br.u.powi(2 * m as i64 + 2);
    Ok(SeriesValue { value: sum, tail_log2: tail, terms_used: n }.scaled(&factor))
}

/// `S_{2m+2}(phi) = sum_n phi^{2m+2} / sinh^{2m+2}(n phi / 2)`.
#[allow(non_snake_case)]
pub fn eval_S(m: usize, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    let k = Kernel { a: m as u32 + 1, eps: 0, g: 0, b: 2 * m as u32 + 2 };
    let w = working(prec);
    hyperbolic(m, k, pow2_f(2 * m as i64 + 2, w), phi, prec)
}

/// The first `n_terms` terms of `S_{2m+2}(phi)`; `tail_log2` bounds the
/// omitted remainder.
#[allow(non_snake_case)]
pub fn eval_S_truncated(m: usize, phi: &BigComplex, n_terms: usize, prec: usize) -> Result<SeriesValue> {
    let k = Kernel { a: m as u32 + 1, eps: 0, g: 0, b: 2 * m as u32 + 2 };
    let w = working(prec);
    hyperbolic_terms(m, k, pow2_f(2 * m as i64 + 2, w), phi, prec, Some(n_terms))
}

/// `S^{(gamma)}_{2m+2}(phi)`, the `cosh^gamma(n phi)`-weighted series.
#[allow(non_snake_case)]
pub fn eval_S_cosh(m: usize, gamma: i64, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    if gamma > m as i64 {
        return Err(Error::Param(format!("gamma = {gamma} must be below m + 1 = {}", m + 1)));
    }
    let k = Kernel { a: (m as i64 + 1 - gamma) as u32, eps: 1, g: gamma, b: 2 * m as u32 + 2 };
    let w = working(prec);
    hyperbolic(m, k, pow2_f(2 * m as i64 + 2 - gamma, w), phi, prec)
}

/// `S^{(sinh,gamma)}_{2m+2}(phi)`, the `sinh^gamma(n phi)`-weighted series.
///
/// The divergent case `m = 0, gamma = 1` is returned in its regularized
/// form `4 sigma phi^2 L_{e^{-sigma phi}}(0)`, i.e. with the constant
/// `2 sigma` removed from every term.
#[allow(non_snake_case)]
pub fn eval_S_sinh(m: usize, gamma: i64, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    let w = working(prec);
    let sigma = if phi.re().is_negative() { -1 } else { 1 };
    if m == 0 && gamma == 1 {
        let k = Kernel { a: 1, eps: 0, g: 0, b: 1 };
        return hyperbolic(0, k, BigComplex::from_i64(4 * sigma, w), phi, prec);
    }
    if gamma > m as i64 {
        return Err(Error::Param(format!("gamma = {gamma} must be below m + 1 = {}", m + 1)));
    }
    let k = Kernel { a: (m as i64 + 1 - gamma) as u32, eps: -1, g: gamma, b: 2 * m as u32 + 2 };
    let sign = if gamma.rem_euclid(2) == 1 { sigma } else { 1 };
    let c = &pow2_f(2 * m as i64 + 2 - gamma, w) * &BigComplex::from_i64(sign, w);
    hyperbolic(m, k, c, phi, prec)
}

// ---- Weighted Lambert sums ----

/// Bound `|w(k)| <= 2^{log2_c} (k + shift)^deg` on a Lambert weight.
#[derive(Debug, Clone, Copy)]
struct WeightBound {
    log2_c: f64,
    shift: f64,
    deg: f64,
}

/// `sum_{k >= 1} w(k) Q^k / (1 - Q^k)`.
fn lambert_sum(
    br: &Branch,
    w: usize,
    weight: impl Fn(u64) -> BigFloat,
    bound: WeightBound,
) -> Result<(BigComplex, f64, usize)> {
    let cap = term_cap();
    let one = BigComplex::one(w);
    let mut qs = QPowers::new(&br.u);
    let mut sum = BigComplex::zero(w);
    let log2r = -br.re_u * std::f64::consts::LOG2_E;
    loop {
        let q = qs.next().clone();
        let k = qs.n;
        let wk = weight(k as u64);
        if !wk.is_zero() {
            sum = &sum + &(&q / &(&one - &q)).scale(&wk);
        }
        let next = k as f64 + 1.0 + bound.shift;
        let growth = if bound.deg > 0.0 { bound.deg * ((next + 1.0) / next).log2() } else { 0.0 };
        let log2_rho = log2r + growth;
        if log2_rho < 0.0 {
            let t = (k + 1) as f64 * br.re_u;
            let tail = bound.log2_c + bound.deg * next.log2()
                - t * std::f64::consts::LOG2_E
                - log2_one_minus_exp(t)
                - (1.0 - log2_rho.exp2()).log2()
                + 1.0;
            if stop_reached(tail, &sum, w) {
                return Ok((sum, tail, k));
            }
        }
        if k >= cap {
            return Err(cap_error(k));
        }
    }
}

/// Lambert series `L_{e^{-phi}}(s) = sum_k k^s q^k / (1 - q^k)`, `q = e^{-phi}`.
pub fn eval_lambert(phi: &BigComplex, s: i64, prec: usize) -> Result<SeriesValue> {
    check_prec(prec)?;
    if !phi.re().is_positive() {
        return Err(Error::Domain("the Lambert series needs Re(phi) > 0".into()));
    }
    let w = working(prec);
    let br = branch(phi, w)?;
    let weight = |k: u64| {
        let base = int_f(k as i64, w);
        let p = base.powi(s.unsigned_abs() as usize, w, RM);
        if s >= 0 {
            p
        } else {
            int_f(1, w).div(&p, w, RM)
        }
    };
    let bound = WeightBound { log2_c: 0.0, shift: 0.0, deg: s as f64 };
    let (sum, tail, n) = lambert_sum(&br, w, weight, bound)?;
    Ok(SeriesValue { value: sum, tail_log2: tail, terms_used: n })
}

/// `S_{2m+2}` through its exponential (binomial-weight) representation
/// `(2 phi)^{2m+2} sum_k C(k+m, k-m-1) Q^k / (1 - Q^k)`.
#[allow(non_snake_case)]
pub fn eval_S_exp(m: usize, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    check_prec(prec)?;
    let w = working(prec);
    let br = branch(phi, w)?;
    let mi = m as i64;
    let weight = |k: u64| {
        let k = k as i64;
        crate::bigc::bigint_to_float(&binomial_signed(k + mi, k - mi - 1))
    };
    let bound = WeightBound {
        log2_c: -crate::exact::log2_abs(&Rational::from_integer(factorial(2 * m + 1))),
        shift: m as f64,
        deg: 2.0 * m as f64 + 1.0,
    };
    let (sum, tail, n) = lambert_sum(&br, w, weight, bound)?;
    let factor = (&BigComplex::from_i64(2, w) * &br.u).powi(2 * mi + 2);
    Ok(SeriesValue { value: sum, tail_log2: tail, terms_used: n }.scaled(&factor))
}

/// `S^{(sinh,1)}_{2m+2}` through its exponential representation
/// `(2 sigma phi)^{2m+1} phi sum_k [C(k+m-1, k-m-1) + C(k+m, k-m)] Q^k / (1 - Q^k)`.
///
/// For `m = 0` this is the regularized value of [`eval_S_sinh`].
#[allow(non_snake_case)]
pub fn eval_S_sinh_exp(m: usize, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    check_prec(prec)?;
    let w = working(prec);
    let br = branch(phi, w)?;
    let mi = m as i64;
    let weight = |k: u64| {
        let k = k as i64;
        let v = binomial_signed(k + mi - 1, k - mi - 1) + binomial_signed(k + mi, k - mi);
        crate::bigc::bigint_to_float(&v)
    };
    let bound = WeightBound {
        log2_c: 1.0 - crate::exact::log2_abs(&Rational::from_integer(factorial(2 * m))),
        shift: m as f64,
        deg: 2.0 * m as f64,
    };
    let (sum, tail, n) = lambert_sum(&br, w, weight, bound)?;
    // (2 sigma phi)^{2m+1} phi = 2^{2m+1} sigma u^{2m+2}
    let sign = BigComplex::from_i64(br.sigma as i64, w);
    let factor = &(&pow2_f(2 * mi + 1, w) * &br.u.powi(2 * mi + 2)) * &sign;
    Ok(SeriesValue { value: sum, tail_log2: tail, terms_used: n }.scaled(&factor))
}

/// The linear combination `(2 phi)^{2m+2}/(2m+1)! sum_i c_{2i+1} L_{e^{-sigma phi}}(2i+1)`.
#[allow(non_snake_case)]
pub fn eval_S_via_lambert(m: usize, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    check_prec(prec)?;
    let w = working(prec);
    let br = branch(phi, w)?;
    let c = c_table(m, Route::BinomialExpansion)?;
    let mut acc = BigComplex::zero(w);
    let mut tail = f64::NEG_INFINITY;
    let mut used = 0;
    for (i, ci) in c.values.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let l = eval_lambert(&br.u, 2 * i as i64 + 1, prec)?;
        let cf = rational_to_float(ci, w);
        acc = &acc + &l.value.scale(&cf);
        tail = log2_add(tail, l.tail_log2 + log2_abs(&cf));
        used = used.max(l.terms_used);
    }
    let two_u = &BigComplex::from_i64(2, w) * &br.u;
    let factor = two_u.powi(2 * m as i64 + 2).scale_rational(&Rational::new(BigInt::one(), factorial(2 * m + 1)));
    Ok(SeriesValue { value: acc, tail_log2: tail, terms_used: used }.scaled(&factor))
}

/// The combination `(2 sigma phi)^{2m+1} phi/(2m)! sum_i d_{2i} L_{e^{-sigma phi}}(2i)`.
#[allow(non_snake_case)]
pub fn eval_S_sinh_via_lambert(m: usize, phi: &BigComplex, prec: usize) -> Result<SeriesValue> {
    check_prec(prec)?;
    let w = working(prec);
    let br = branch(phi, w)?;
    let d = d_table(m, Route::BinomialExpansion)?;
    let mut acc = BigComplex::zero(w);
    let mut tail = f64::NEG_INFINITY;
    let mut used = 0;
    for (i, di) in d.values.iter().enumerate() {
        if di.is_zero() {
            continue;
        }
        let l = eval_lambert(&br.u, 2 * i as i64, prec)?;
        let df = rational_to_float(di, w);
        acc = &acc + &l.value.scale(&df);
        tail = log2_add(tail, l.tail_log2 + log2_abs(&df));
        used = used.max(l.terms_used);
    }
    let sign = BigComplex::from_i64(br.sigma as i64, w);
    let factor = (&(&pow2_f(2 * m as i64 + 1, w) * &br.u.powi(2 * m as i64 + 2)) * &sign)
        .scale_rational(&Rational::new(BigInt::one(), factorial(2 * m)));
    Ok(SeriesValue { value: acc, tail_log2: tail, terms_used: used }.scaled(&factor))
}

fn log2_add(a: f64, b: f64) -> f64 {
    let hi = a.max(b);
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + (1.0 + (a.min(b) - hi).exp2()).log2()
}

/// `psi^{(s)}_{e^{-phi}}(1) = (-phi)^{s+1} L_{e^{-phi}}(s)`.
pub fn qpolygamma_one(phi: &BigComplex, s: usize, prec: usize) -> Result<SeriesValue> {
    if s == 0 {
        return Err(Error::Param("the q-polygamma relation needs s >= 1".into()));
    }
    let l = eval_lambert(phi, s as i64, prec)?;
    let w = working(prec);
    let factor = (-&phi.with_prec(w)).powi(s as i64 + 1);
    Ok(l.scaled(&factor))
}

// ---- Constants ----

/// `zeta(s)` for integer `s >= 2`.
pub fn zeta_int(s: usize, prec: usize) -> Result<BigFloat> {
    check_prec(prec)?;
    if s < 2 {
        return Err(Error::Param(format!("zeta(s) needs s >= 2, got {s}")));
    }
    let w = working(prec);
    if s % 2 == 0 {
        // (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
        let k = s / 2;
        let q = bernoulli_number(s) * Rational::from_integer(BigInt::from(sign_pow(k + 1)))
            / Rational::from_integer(factorial(s) * 2);
        let two_pi = pi(w).mul(&int_f(2, w), w, RM);
        let v = two_pi.powi(s, w, RM).mul(&rational_to_float(&q, w), w, RM);
        return Ok(round_to(v, prec));
    }
    Ok(round_to(zeta_odd(s, w), prec))
}

fn round_to(mut x: BigFloat, prec: usize) -> BigFloat {
    let _ = x.set_precision(prec + GUARD_BITS / 2, RM);
    x
}

/// Euler-Maclaurin summation; the correction terms are added until they
/// drop below `2^{-(w+8)}`, which also bounds the remainder for real `s`.
fn zeta_odd(s: usize, w: usize) -> BigFloat {
    let mut big_n = w / 4 + 10;
    loop {
        if let Some(v) = zeta_em(s, big_n, w) {
            return v;
        }
        big_n *= 2;
    }
}

fn zeta_em(s: usize, big_n: usize, w: usize) -> Option<BigFloat> {
    let mut acc = zero_f(w);
    for n in 1..big_n {
        let t = int_f(n as i64, w).powi(s, w, RM);
        acc = acc.add(&int_f(1, w).div(&t, w, RM), w, RM);
    }
    let nf = int_f(big_n as i64, w);
    let n_pow = nf.powi(s - 1, w, RM);
    acc = acc.add(&int_f(1, w).div(&n_pow.mul(&int_f(s as i64 - 1, w), w, RM), w, RM), w, RM);
    let n_s = n_pow.mul(&nf, w, RM);
    acc = acc.add(&int_f(1, w).div(&n_s.mul(&int_f(2, w), w, RM), w, RM), w, RM);
    let s_rat = Rational::from_integer(BigInt::from(s));
    let n_rat = Rational::from_integer(BigInt::from(big_n));
    let target = -(w as f64) - 8.0;
    let max_j = 2 * big_n;
    let b = bernoulli_numbers(2 * max_j);
    for j in 1..=max_j {
        let coeff = &b[2 * j] * pochhammer(&s_rat, 2 * j - 1)
            / Rational::from_integer(factorial(2 * j))
            / num_traits::pow(n_rat.clone(), s + 2 * j - 1);
        let size = crate::exact::log2_abs(&coeff);
        acc = acc.add(&rational_to_float(&coeff, w), w, RM);
        if size < target {
            return Some(acc);
        }
    }
    None
}

/// Euler's constant through the Euler-Maclaurin expansion of `H_N`.
pub fn euler_gamma(prec: usize) -> Result<BigFloat> {
    check_prec(prec)?;
    let w = working(prec);
    let mut big_n = w / 4 + 10;
    loop {
        let n_rat = Rational::from_integer(BigInt::from(big_n));
        let mut q = harmonic(big_n, 1) - Rational::new(BigInt::one(), BigInt::from(2 * big_n));
        let target = -(w as f64) - 8.0;
        let max_j = 2 * big_n;
        let b = bernoulli_numbers(2 * max_j);
        let mut done = false;
        for j in 1..=max_j {
            let t = &b[2 * j] / Rational::from_integer(BigInt::from(2 * j)) / num_traits::pow(n_rat.clone(), 2 * j);
            let size = crate::exact::log2_abs(&t);
            q += t;
            if size < target {
                done = true;
                break;
            }
        }
        if done {
            let ln_n = with_consts(|cc| int_f(big_n as i64, w).ln(w, RM, cc));
            let v = rational_to_float(&q, w).sub(&ln_n, w, RM);
            return Ok(round_to(v, prec));
        }
        big_n *= 2;
    }
}

/// `psi^{(n)}(1)`: `-gamma` for `n = 0`, else `(-1)^{n+1} n! zeta(n+1)`.
pub fn polygamma_one(n: usize, prec: usize) -> Result<BigFloat> {
    if n == 0 {
        return Ok(BigFloat::neg(&euler_gamma(prec)?));
    }
    let w = working(prec);
    let z = zeta_int(n + 1, prec)?;
    let f = crate::bigc::bigint_to_float(&(factorial(n) * sign_pow(n + 1)));
    Ok(round_to(z.mul(&f, w, RM), prec))
}

// ---- Exact objects evaluated numerically ----

fn pi_power(b: i32, w: usize) -> BigFloat {
    let p = pi(w).powi(b.unsigned_abs() as usize, w, RM);
    if b >= 0 {
        p
    } else {
        int_f(1, w).div(&p, w, RM)
    }
}

/// `P(phi)` with `pi` substituted to working precision.
pub fn eval_pi_poly(p: &PiPolynomial, phi: &BigComplex, prec: usize) -> BigComplex {
    let w = working(prec);
    let phi = phi.with_prec(w);
    let mut acc = BigComplex::zero(w);
    for (a, b, c) in p.terms() {
        let coeff = rational_to_float(c, w).mul(&pi_power(b, w), w, RM);
        acc = &acc + &phi.powi(a as i64).scale(&coeff);
    }
    acc
}

pub fn eval_pi_number(p: &PiNumber, prec: usize) -> BigFloat {
    let w = working(prec);
    p.terms().fold(zero_f(w), |acc, (b, c)| acc.add(&rational_to_float(c, w).mul(&pi_power(b, w), w, RM), w, RM))
}

/// Evaluate a symbolic expansion, resolving `zeta`, `gamma` and `log(phi)`.
pub fn eval_symbolic(p: &SymbolicPolynomial, phi: &BigComplex, prec: usize) -> Result<BigComplex> {
    let w = working(prec);
    let phi = phi.with_prec(w);
    let mut acc = BigComplex::zero(w);
    let mut log_phi = None;
    for (a, sym, c) in p.terms() {
        let mut term = phi.powi(a as i64).scale(&rational_to_float(c, w));
        match sym {
            Symbol::One => {}
            Symbol::Zeta(s) => term = term.scale(&zeta_int(s as usize, w)?),
            Symbol::EulerGamma => term = term.scale(&euler_gamma(w)?),
            Symbol::LogPhi => {
                let l = log_phi.get_or_insert_with(|| phi.ln());
                term = &term * l;
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigc::format_sig;

    fn c(s: &str) -> BigComplex {
        BigComplex::parse(s, 256).unwrap()
    }

    fn rel_err(a: &BigComplex, b: &BigComplex) -> f64 {
        (a - b).log2_abs() - a.log2_abs().max(0.0)
    }

    #[test]
    fn zeta_values() {
        let z2 = zeta_int(2, 128).unwrap();
        let pi2 = pi(160).powi(2, 160, RM).div(&int_f(6, 160), 160, RM);
        assert!(log2_abs(&z2.sub(&pi2, 160, RM)) < -125.0);
        let z3 = format_sig(&zeta_int(3, 256).unwrap(), 40);
        assert_eq!(z3, "1.202056903159594285399738161511449990765e0");
        let z5 = format_sig(&zeta_int(5, 128).unwrap(), 30);
        assert_eq!(z5, "1.03692775514336992633136548646e0");
        assert!(zeta_int(1, 64).is_err());
    }

    #[test]
    fn euler_gamma_value() {
        let g = format_sig(&euler_gamma(200).unwrap(), 50);
        assert_eq!(g, "5.7721566490153286060651209008240243104215933593992e-1");
    }

    #[test]
    fn polygamma_values() {
        let p3 = polygamma_one(3, 128).unwrap();
        let want = pi(160).powi(4, 160, RM).div(&int_f(15, 160), 160, RM);
        assert!(log2_abs(&p3.sub(&want, 160, RM)) < -120.0);
        let p2 = to_f64(&polygamma_one(2, 64).unwrap());
        assert!((p2 + 2.0 * 1.2020569031595942).abs() < 1e-15);
    }

    #[test]
    fn s_is_even_and_matches_lambert() {
        for m in 0..3 {
            let a = eval_S(m, &c("1.5,0.7"), 128).unwrap();
            let b = eval_S(m, &c("-1.5,-0.7"), 128).unwrap();
            assert!(rel_err(&a.value, &b.value) < -120.0);
            let l = eval_S_via_lambert(m, &c("1.5,0.7"), 128).unwrap();
            assert!(rel_err(&a.value, &l.value) < -120.0);
            let e = eval_S_exp(m, &c("-1.5,0.7"), 128).unwrap();
            assert!(rel_err(&a.value, &e.value.conj()) < -120.0);
        }
    }

    #[test]
    fn sinh_variants_agree() {
        for m in 0..3 {
            let phi = c("0.8,-0.4");
            let a = eval_S_sinh(m, 1, &phi, 128).unwrap();
            let b = eval_S_sinh_exp(m, &phi, 128).unwrap();
            let d = eval_S_sinh_via_lambert(m, &phi, 128).unwrap();
            assert!(rel_err(&a.value, &b.value) < -120.0, "m = {m}");
            assert!(rel_err(&a.value, &d.value) < -120.0, "m = {m}");
            let neg = eval_S_sinh(m, 1, &(-&phi), 128).unwrap();
            assert!(rel_err(&a.value, &(-&neg.value)) < -120.0);
        }
    }

    #[test]
    fn domain_and_precision_errors() {
        assert!(matches!(eval_S(0, &c("0,1"), 128), Err(Error::Domain(_))));
        assert!(matches!(eval_S(0, &c("1"), 8), Err(Error::Precision(_))));
        assert!(matches!(eval_lambert(&c("-1"), 1, 64), Err(Error::Domain(_))));
        assert!(eval_S_cosh(1, 2, &c("1"), 64).is_err());
    }

    #[test]
    fn lambert_self_dual_point() {
        // L_{e^{-2 pi}}(1) = 1/24 - 1/(8 pi)
        let w = 200;
        let two_pi = BigComplex::real(pi(w).mul(&int_f(2, w), w, RM), w);
        let l = eval_lambert(&two_pi, 1, 160).unwrap();
        let want = rational_to_float(&crate::exact::rat(1, 24), w).sub(
            &int_f(1, w).div(&pi(w).mul(&int_f(8, w), w, RM), w, RM),
            w,
            RM,
        );
        assert!(log2_abs(&l.value.re().sub(&want, w, RM)) < -160.0);
    }

    #[test]
    fn pi_poly_values() {
        let b0 = crate::polynomials::calB(0);
        let v = eval_pi_poly(&b0, &BigComplex::zero(128), 128);
        let want = pi(200).powi(2, 200, RM).mul(&rational_to_float(&crate::exact::rat(2, 3), 200), 200, RM);
        assert!(log2_abs(&v.re().sub(&want, 200, RM)) < -120.0);
        let two_pi_i = BigComplex::new(zero_f(200), pi(200).mul(&int_f(2, 200), 200, RM), 200);
        for m in 0..4 {
            let z = eval_pi_poly(&crate::polynomials::calB(m), &two_pi_i, 128);
            assert!(z.log2_abs() < -110.0);
        }
    }
}

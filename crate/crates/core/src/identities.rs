//! Exact Bernoulli, Stirling and harmonic-number identities, run as a suite.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bernoulli::{
    bernoulli_numbers, bernoulli_poly, gamma_ratio_poly, gen_bernoulli_via_bell, reduced_even_values,
    reduced_odd_values,
};
use crate::coefficients::{c_table, d_table, harmonic_c_entry, harmonic_d_entry, Route};
use crate::error::{Error, Result};
use crate::exact::{binomial, binomial_signed, factorial, harmonic, int, pochhammer, rat, sign_pow};
use crate::exact::{IntTriangleCache, Rational, TriangleKind};
use crate::pipoly::PiPolynomial;
use crate::polynomials::{calA, calB};
use crate::ratpoly::RationalPolynomial;

/// Outcome of one identity family over its parameter range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, failures: Vec::new() }
    }

    fn case(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Parameter ranges of the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub m_max: usize,
    /// Upper `m` for the harmonic-number closed forms.
    pub harmonic_m_max: usize,
    /// Replace `B_n` by `B_n + 1/1000` in the Bernoulli convolution identity;
    /// a negative control that must make that identity fail (for even `n`).
    pub perturb_bernoulli: Option<usize>,
}

impl SuiteConfig {
    pub fn new(m_max: usize) -> Self {
        Self { m_max, harmonic_m_max: m_max, perturb_bernoulli: None }
    }
}

pub fn identity_suite(m_max: usize) -> Result<Vec<IdentityCheck>> {
    identity_suite_with(SuiteConfig::new(m_max))
}

pub fn identity_suite_with(cfg: SuiteConfig) -> Result<Vec<IdentityCheck>> {
    if cfg.m_max < 1 {
        return Err(Error::Param("the identity suite needs m_max >= 1".into()));
    }
    let m_max = cfg.m_max;
    Ok(vec![
        odd_order_zeros(m_max),
        bernoulli_convolution_zero(m_max, cfg.perturb_bernoulli),
        vanishing_stirling_sums(m_max),
        stirling_bernoulli_values(m_max),
        harmonic_special_values(cfg.harmonic_m_max.max(1)),
        bell_route(m_max),
        special_value_polynomials(m_max),
        elezovic_recurrence(m_max),
        gamma_ratio_products(20),
        coefficient_routes(m_max),
        coefficient_reconstruction(m_max),
        asymptotic_polynomial_equality(m_max),
        imaginary_zeros(m_max),
    ])
}

// ---- Reduced Bernoulli values ----

/// `B_{2m}^{(2m+1)}(m) = 0` for `m >= 1`.
pub fn odd_order_zeros(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("odd-order-zeros");
    for m in 1..=m_max {
        let v = reduced_odd_values(2 * m, m).pop().expect("nonempty");
        chk.case(v.is_zero(), || format!("m={m}: B_{{2m}}^(2m+1)(m) = {v}"));
    }
    chk
}

/// `sum_k B_{2k} B^{(2m+2)}_{2m+2-2k}(m+1) / ((2k)! (2m+2-2k)!)` for a given
/// Bernoulli table.
pub fn bernoulli_convolution_sum(m: usize, bern: &[Rational]) -> Rational {
    let r = reduced_even_values(2 * m + 2, m);
    (0..=m + 1)
        .map(|k| {
            let j = 2 * m + 2 - 2 * k;
            &bern[2 * k] * &r[j] / Rational::from_integer(factorial(2 * k) * factorial(j))
        })
        .fold(Rational::zero(), |a, t| a + t)
}

fn bernoulli_convolution_zero(m_max: usize, perturb: Option<usize>) -> IdentityCheck {
    let mut chk = IdentityCheck::new("bernoulli-convolution-zero");
    let mut bern = bernoulli_numbers(2 * m_max + 2);
    if let Some(n) = perturb {
        if n < bern.len() {
            bern[n] += rat(1, 1000);
        }
    }
    for m in 0..=m_max {
        let v = bernoulli_convolution_sum(m, &bern);
        chk.case(v.is_zero(), || format!("m={m}: sum = {v}"));
    }
    chk
}

// ---- Stirling-number identities ----

fn stirling_term(len: usize, j: usize, st: &mut IntTriangleCache) -> Rational {
    Rational::new(st.get(len, j), BigInt::from(j + 1))
}

/// First vanishing sum, `1 <= i <= m`.
pub fn vanishing_sum_first(m: usize, i: usize, st: &mut IntTriangleCache) -> Rational {
    let at = int(m as i64);
    let mut acc = Rational::zero();
    for j in (2 * i - 1)..=2 * m {
        acc += stirling_term(2 * m, j, st)
            * pochhammer(&int((j + 2 - 2 * i) as i64), 2 * i)
            * bernoulli_poly(j + 1 - 2 * i).eval(&at);
    }
    acc
}

/// Second vanishing sum, `0 <= i <= m - 1`.
pub fn vanishing_sum_second(m: usize, i: usize, st: &mut IntTriangleCache) -> Rational {
    let a = int(m as i64);
    let b = int(m as i64 - 1);
    let mut acc = Rational::zero();
    for j in 2 * i..2 * m {
        let p = bernoulli_poly(j - 2 * i);
        acc += stirling_term(2 * m - 1, j, st)
            * pochhammer(&int((j + 1 - 2 * i) as i64), 2 * i + 1)
            * (p.eval(&a) + p.eval(&b));
    }
    acc
}

fn vanishing_stirling_sums(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("vanishing-stirling-sums");
    let mut st = IntTriangleCache::new(TriangleKind::StirlingFirst);
    for m in 1..=m_max {
        for i in 1..=m {
            let v = vanishing_sum_first(m, i, &mut st);
            chk.case(v.is_zero(), || format!("first m={m} i={i}: {v}"));
        }
        for i in 0..m {
            let v = vanishing_sum_second(m, i, &mut st);
            chk.case(v.is_zero(), || format!("second m={m} i={i}: {v}"));
        }
    }
    chk
}

/// `B_{2n}^{(2m+2)}(m+1)` through Stirling numbers and `B_j(m)`.
pub fn even_order_via_stirling(m: usize, n: usize, st: &mut IntTriangleCache) -> Rational {
    let at = int(m as i64);
    let mut acc = Rational::zero();
    for j in (2 * m - 2 * n)..=2 * m {
        acc += stirling_term(2 * m, j, st)
            * pochhammer(&int((j + 2 * n + 1 - 2 * m) as i64), 2 * m - 2 * n + 1)
            * bernoulli_poly(j + 2 * n - 2 * m).eval(&at);
    }
    acc * Rational::new(factorial(2 * n), factorial(2 * m))
}

/// `B_{2n}^{(2m+1)}(m)` through Stirling numbers and `B_j(m)`, `n <= m - 1`.
pub fn odd_order_via_stirling(m: usize, n: usize, st: &mut IntTriangleCache) -> Rational {
    let at = int(m as i64);
    let mut acc = Rational::zero();
    for j in (2 * m - 1 - 2 * n)..2 * m {
        acc += stirling_term(2 * m - 1, j, st)
            * pochhammer(&int((j + 2 * n + 2 - 2 * m) as i64), 2 * m - 2 * n)
            * bernoulli_poly(j + 2 * n + 1 - 2 * m).eval(&at);
    }
    acc * Rational::new(factorial(2 * n), factorial(2 * m - 1))
}

fn stirling_bernoulli_values(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("stirling-bernoulli-values");
    let mut st = IntTriangleCache::new(TriangleKind::StirlingFirst);
    for m in 0..=m_max {
        let even = reduced_even_values(2 * m, m);
        for n in 0..=m {
            let v = even_order_via_stirling(m, n, &mut st);
            chk.case(v == even[2 * n], || format!("even m={m} n={n}: {v} vs {}", even[2 * n]));
        }
        if m >= 1 {
            let odd = reduced_odd_values(2 * m, m);
            for n in 0..m {
                let v = odd_order_via_stirling(m, n, &mut st);
                chk.case(v == odd[2 * n], || format!("odd m={m} n={n}: {v} vs {}", odd[2 * n]));
            }
        }
    }
    chk
}

// ---- Harmonic closed forms ----

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// The four even-order closed forms; `line` selects `B_{2m-2 line}`.
pub fn harmonic_even_form(m: usize, line: usize) -> Option<Rational> {
    if line > m || line > 3 {
        return None;
    }
    let h2 = harmonic(m, 2);
    let h4 = harmonic(m, 4);
    let h6 = harmonic(m, 6);
    let msq = fact(m) * fact(m);
    let base = fact(2 * m - 2 * line) / fact(2 * m + 1) * msq * int(sign_pow(m + line));
    let v = match line {
        0 => base,
        1 => base * int(6) * h2,
        2 => base * fact(5) / int(2) * (&h2 * &h2 - h4),
        _ => base * fact(7) / int(6) * (&h2 * &h2 * &h2 - int(3) * &h2 * &h4 + int(2) * h6),
    };
    Some(v)
}

/// The odd-order closed forms for `B_{2m-2 line}^{(2m+1)}(m)`.
pub fn harmonic_odd_form(m: usize, line: usize) -> Option<Rational> {
    if line > m || line > 3 {
        return None;
    }
    if line == 0 {
        return Some(if m == 0 { int(1) } else { Rational::zero() });
    }
    let h2 = harmonic(m - 1, 2);
    let h4 = harmonic(m - 1, 4);
    let msq = fact(m - 1) * fact(m - 1);
    let base = fact(2 * m - 2 * line) / fact(2 * m) * msq * int(sign_pow(m + line));
    let v = match line {
        1 => base * int(2),
        2 => base * fact(4) * h2,
        _ => base * fact(6) / int(2) * (&h2 * &h2 - h4),
    };
    Some(v)
}

fn harmonic_special_values(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("harmonic-special-values");
    for m in 0..=m_max {
        let even = reduced_even_values(2 * m, m);
        let odd = reduced_odd_values(2 * m, m);
        let c = c_table(m, Route::BinomialExpansion).expect("total route");
        let d = d_table(m, Route::BinomialExpansion).expect("total route");
        for line in 0..=m.min(3) {
            let idx = 2 * m - 2 * line;
            let e = harmonic_even_form(m, line).expect("in range");
            chk.case(e == even[idx], || format!("even m={m} line={line}: {e} vs {}", even[idx]));
            let o = harmonic_odd_form(m, line).expect("in range");
            chk.case(o == odd[idx], || format!("odd m={m} line={line}: {o} vs {}", odd[idx]));
            let hc = harmonic_c_entry(m, line).expect("in range");
            chk.case(hc == c.values[line], || format!("c m={m} i={line}: {hc}"));
            let hd = harmonic_d_entry(m, line).expect("in range");
            chk.case(hd == d.values[line], || format!("d m={m} i={line}: {hd}"));
        }
    }
    chk
}

// ---- Bell polynomials, special values, recurrences ----

fn bell_route(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("bell-route");
    for m in 0..=m_max {
        let r = reduced_even_values(16, m);
        for (n, rn) in r.iter().enumerate().skip(1) {
            let v = gen_bernoulli_via_bell(n, m).expect("n >= 1");
            chk.case(&v == rn, || format!("m={m} n={n}: {v} vs {rn}"));
        }
    }
    chk
}

/// `B_{2n}^{(2m+2)}(m+1)` as the displayed polynomials in `m`, `n <= 5`.
pub fn special_value_polynomial(n: usize) -> Option<(RationalPolynomial, i64)> {
    let (coeffs, den): (&[i64], i64) = match n {
        0 => (&[1], 1),
        1 => (&[-1, -1], 6),
        2 => (&[6, 11, 5], 60),
        3 => (&[-60, -151, -126, -35], 504),
        4 => (&[504, 1550, 1781, 910, 175], 2160),
        5 => (&[-2160, -7638, -10769, -7601, -2695, -385], 3168),
        _ => return None,
    };
    Some((RationalPolynomial::new(coeffs.iter().map(|&c| int(c)).collect()), den))
}

fn special_value_polynomials(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("special-value-polynomials");
    for m in 0..=m_max {
        let r = reduced_even_values(11, m);
        let mm = int(m as i64);
        for n in 0..=5 {
            let (p, den) = special_value_polynomial(n).expect("n <= 5");
            let v = p.eval(&mm) / int(den);
            chk.case(v == r[2 * n], || format!("m={m} 2n={}: {v} vs {}", 2 * n, r[2 * n]));
            let odd = &r[2 * n + 1];
            chk.case(odd.is_zero(), || format!("m={m} odd index {}: {odd}", 2 * n + 1));
        }
    }
    chk
}

fn elezovic_recurrence(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("elezovic-recurrence");
    let b = bernoulli_numbers(24);
    for m in 0..=m_max {
        let r = reduced_even_values(24, m);
        for n in 1..=12 {
            let s = (0..n)
                .map(|k| Rational::from_integer(binomial(2 * n as u64, 2 * k as i64)) * &b[2 * n - 2 * k] * &r[2 * k])
                .fold(Rational::zero(), |a, t| a + t);
            let v = -s * rat(m as i64 + 1, n as i64);
            chk.case(v == r[2 * n], || format!("m={m} n={n}: {v} vs {}", r[2 * n]));
        }
    }
    chk
}

fn gamma_ratio_products(total_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("gamma-ratio-products");
    for total in 0..=total_max {
        for alpha in 0..=total {
            let beta = total - alpha;
            let direct = (-(beta as i64)..alpha as i64)
                .fold(RationalPolynomial::one(), |acc, j| &acc * &RationalPolynomial::linear(int(j)));
            let v = gamma_ratio_poly(alpha, beta);
            chk.case(v == direct, || format!("alpha={alpha} beta={beta}: {v} vs {direct}"));
        }
    }
    chk
}

// ---- Coefficient tables and polynomial families ----

fn coefficient_routes(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("coefficient-routes");
    for m in 0..=m_max {
        let c0 = c_table(m, Route::BinomialExpansion).expect("total route");
        let d0 = d_table(m, Route::BinomialExpansion).expect("total route");
        for route in [Route::GenBernoulli, Route::StirlingBernoulli] {
            let c = c_table(m, route).expect("total route");
            chk.case(c.values == c0.values, || format!("c m={m} route={route}"));
            let d = d_table(m, route).expect("total route");
            chk.case(d.values == d0.values, || format!("d m={m} route={route}"));
        }
        let one = Rational::one();
        chk.case(c0.values[m] == one, || format!("c m={m}: leading coefficient {}", c0.values[m]));
    }
    chk
}

fn coefficient_reconstruction(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("coefficient-reconstruction");
    for m in 0..=m_max {
        let pc = c_table(m, Route::BinomialExpansion).expect("total route").polynomial();
        let pd = d_table(m, Route::BinomialExpansion).expect("total route").polynomial();
        chk.case(pc.is_odd(), || format!("c m={m}: not odd"));
        chk.case(pd.is_even(), || format!("d m={m}: not even"));
        let mi = m as i64;
        for k in 1..=(3 * mi + 3) {
            let want = Rational::from_integer(binomial_signed(k + mi, k - mi - 1));
            chk.case(pc.eval(&int(k)) == want, || format!("c m={m} k={k}"));
            let want =
                Rational::from_integer(binomial_signed(k + mi - 1, k - mi - 1) + binomial_signed(k + mi, k - mi));
            chk.case(pd.eval(&int(k)) == want, || format!("d m={m} k={k}"));
        }
    }
    chk
}

fn asymptotic_polynomial_equality(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("asymptotic-polynomial-equality");
    for m in 0..=m_max {
        let (a, b) = (calA(m), calB(m));
        chk.case(a == b, || format!("m={m}: {a} vs {b}"));
    }
    chk
}

/// `B_{2m+2}` vanishes exactly at `phi^2 = -4 pi^2`.
pub fn vanishes_at_two_pi_i(p: &PiPolynomial) -> bool {
    p.substitute_phi_sq(&int(-4), 2).map(|v| v.is_zero()).unwrap_or(false)
}

fn imaginary_zeros(m_max: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new("imaginary-zeros");
    for m in 0..=m_max {
        chk.case(vanishes_at_two_pi_i(&calB(m)), || format!("m={m}"));
    }
    chk
}

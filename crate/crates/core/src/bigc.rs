//! Arbitrary-precision complex numbers on top of `astro_float`.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint, Sign as IntSign};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Rounding mode used throughout the numeric layer.
pub const RM: RoundingMode = RoundingMode::ToEven;

/// Smallest precision accepted by the numeric layer.
pub const MIN_PREC: usize = 16;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// `pi` rounded to `p` bits.
pub fn pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

pub(crate) fn check_prec(prec: usize) -> Result<()> {
    if prec < MIN_PREC {
        return Err(Error::Precision(format!("precision {prec} is below {MIN_PREC} bits")));
    }
    Ok(())
}

// ---- Real helpers ----

pub(crate) fn zero_f(p: usize) -> BigFloat {
    BigFloat::from_word(0, p)
}

pub(crate) fn int_f(n: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(n, p)
}

/// Exact conversion of an integer (the result carries as many bits as needed).
pub fn bigint_to_float(n: &BigInt) -> BigFloat {
    let (sign, words) = n.to_u64_digits();
    if words.is_empty() {
        return zero_f(64);
    }
    let words: Vec<Word> = words.into_iter().map(|w| w as Word).collect();
    let s = if sign == IntSign::Minus { Sign::Neg } else { Sign::Pos };
    BigFloat::from_words(&words, s, (64 * words.len()) as i32)
}

pub fn rational_to_float(q: &Rational, p: usize) -> BigFloat {
    let n = bigint_to_float(q.numer());
    let d = bigint_to_float(q.denom());
    n.div(&d, p, RM)
}

/// Integer value of a float that is already integral.
fn integral_to_bigint(x: &BigFloat) -> BigInt {
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return BigInt::zero();
    };
    if x.is_zero() {
        return BigInt::zero();
    }
    let mag = BigUint::from_slice(
        &words.iter().flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32]).collect::<Vec<u32>>(),
    );
    let shift = e as i64 - 64 * words.len() as i64;
    let mag = if shift >= 0 { mag << shift as usize } else { mag >> (-shift) as usize };
    let s = if sign == Sign::Neg { IntSign::Minus } else { IntSign::Plus };
    BigInt::from_biguint(s, mag)
}

/// `log2 |x|`, `-inf` for zero. Accurate to about 1e-15 absolute.
pub fn log2_abs(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    match x.as_raw_parts() {
        Some((words, _, _, e, _)) => {
            let top = *words.last().expect("nonzero mantissa");
            e as f64 + ((top as f64) / 2f64.powi(64)).log2()
        }
        None => f64::NAN,
    }
}

/// Nearest `f64` (saturating to zero / infinity outside the `f64` range).
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = *words.last().expect("nonzero mantissa");
    let mant = top as f64 / 2f64.powi(64);
    let v = mant * 2f64.powi(e.clamp(-1100, 1100));
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

/// Decimal scientific notation with `digits` significant digits, e.g. `-1.2340e-5`.
pub fn format_sig(x: &BigFloat, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".into();
    }
    let p = x.mantissa_max_bit_len().unwrap_or(64).max(digits * 4 + 64);
    let ax = x.abs();
    let mut k = (log2_abs(&ax) * std::f64::consts::LOG10_2).floor() as i64;
    let ten_d = BigInt::from(10u32).pow(digits as u32);
    let ten_d1 = BigInt::from(10u32).pow(digits as u32 - 1);
    let mut y = BigInt::zero();
    for _ in 0..4 {
        let scaled = scale_pow10(&ax, digits as i64 - 1 - k, p);
        y = integral_to_bigint(&scaled.round(0, RM));
        if y >= ten_d {
            k += 1;
        } else if y < ten_d1 {
            k -= 1;
        } else {
            break;
        }
    }
    let s = y.to_string();
    let sign = if x.is_negative() { "-" } else { "" };
    if s.len() == 1 {
        format!("{sign}{s}e{k}")
    } else {
        format!("{sign}{}.{}e{k}", &s[..1], &s[1..])
    }
}

fn scale_pow10(x: &BigFloat, e: i64, p: usize) -> BigFloat {
    let t = bigint_to_float(&BigInt::from(10u32).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        x.mul(&t, p, RM)
    } else {
        x.div(&t, p, RM)
    }
}

pub fn parse_float(s: &str, p: usize) -> Result<BigFloat> {
    let t = s.trim().replace('\u{2212}', "-");
    let ok = !t.is_empty() && t.chars().all(|c| c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E'));
    if ok {
        let x = with_consts(|cc| BigFloat::parse(&t, Radix::Dec, p, RM, cc));
        if !x.is_nan() && !x.is_inf() {
            return Ok(x);
        }
    }
    Err(Error::Parse(format!("invalid decimal number {s:?}")))
}

fn atan2(y: &BigFloat, x: &BigFloat, p: usize) -> BigFloat {
    let w = p + 8;
    if x.is_zero() {
        let half = pi(w).div(&int_f(2, w), w, RM);
        return if y.is_negative() {
            half.neg()
        } else if y.is_zero() {
            zero_f(p)
        } else {
            half
        };
    }
    let base = with_consts(|cc| y.div(x, w, RM).atan(w, RM, cc));
    if x.is_positive() {
        base
    } else if y.is_negative() {
        base.sub(&pi(w), w, RM)
    } else {
        base.add(&pi(w), w, RM)
    }
}

// ---- Complex numbers ----

/// A complex number `re + i im` carried at `prec` bits.
#[derive(Clone, Debug)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        Self { re, im, prec: prec.max(MIN_PREC) }
    }

    pub fn real(re: BigFloat, prec: usize) -> Self {
        Self::new(re, zero_f(prec), prec)
    }

    pub fn zero(prec: usize) -> Self {
        Self::real(zero_f(prec), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(n: i64, prec: usize) -> Self {
        Self::real(int_f(n, prec), prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Self::new(BigFloat::from_f64(re, prec), BigFloat::from_f64(im, prec), prec)
    }

    pub fn from_rational(q: &Rational, prec: usize) -> Self {
        Self::real(rational_to_float(q, prec), prec)
    }

    /// Parse `"re"` or `"re,im"` decimal strings at full precision.
    pub fn parse(s: &str, prec: usize) -> Result<Self> {
        let mut it = s.split(',');
        let re = parse_float(it.next().unwrap_or(""), prec)?;
        let im = match it.next() {
            Some(t) => parse_float(t, prec)?,
            None => zero_f(prec),
        };
        if it.next().is_some() {
            return Err(Error::Parse(format!("expected \"re[,im]\", got {s:?}")));
        }
        Ok(Self::new(re, im, prec))
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    /// The same value re-rounded to `prec` bits.
    pub fn with_prec(&self, prec: usize) -> Self {
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        let _ = re.set_precision(prec, RM);
        let _ = im.set_precision(prec, RM);
        Self::new(re, im, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), BigFloat::neg(&self.im), self.prec)
    }

    pub fn mul_i(&self) -> Self {
        Self::new(BigFloat::neg(&self.im), self.re.clone(), self.prec)
    }

    pub fn scale(&self, x: &BigFloat) -> Self {
        let p = self.prec;
        Self::new(self.re.mul(x, p, RM), self.im.mul(x, p, RM), p)
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&rational_to_float(q, self.prec + 8))
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.prec + 4;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt(self.prec, RM)
    }

    /// `log2 |z|` without a square root.
    pub fn log2_abs(&self) -> f64 {
        let a = log2_abs(&self.re);
        let b = log2_abs(&self.im);
        let hi = a.max(b);
        if hi == f64::NEG_INFINITY {
            return hi;
        }
        hi + 0.5 * (1.0 + (2f64).powf(2.0 * (a.min(b) - hi))).log2()
    }

    pub fn re_f64(&self) -> f64 {
        to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        to_f64(&self.im)
    }

    pub fn abs_f64(&self) -> f64 {
        self.re_f64().hypot(self.im_f64())
    }

    pub fn recip(&self) -> Self {
        let p = self.prec;
        let w = p + 8;
        let n = self.norm_sqr();
        Self::new(self.re.div(&n, w, RM), BigFloat::neg(&self.im).div(&n, w, RM), p).with_prec(p)
    }

    /// `z^n` for any integer `n` by binary powering.
    pub fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        let w = p + 8;
        let (m, c, s) = with_consts(|cc| {
            let m = self.re.exp(w, RM, cc);
            if self.im.is_zero() {
                return (m, int_f(1, w), zero_f(w));
            }
            (m, self.im.cos(w, RM, cc), self.im.sin(w, RM, cc))
        });
        Self::new(m.mul(&c, p, RM), m.mul(&s, p, RM), p)
    }

    /// Principal branch of the logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec;
        let w = p + 8;
        let r = with_consts(|cc| self.norm_sqr().ln(w, RM, cc)).div(&int_f(2, w), p, RM);
        Self::new(r, atan2(&self.im, &self.re, p), p)
    }

    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec;
        let w = p + 8;
        let r = self.abs();
        let two = int_f(2, w);
        let a = r.add(&self.re.abs(), w, RM).div(&two, w, RM).sqrt(w, RM);
        let b = self.im.abs().div(&a.mul(&two, w, RM), w, RM);
        let (re, mut im) = if self.re.is_negative() { (b, a) } else { (a, b) };
        if self.im.is_negative() {
            im = im.neg();
        }
        Self::new(re, im, w).with_prec(p)
    }

    /// Real and imaginary parts as decimal strings with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (format_sig(&self.re, digits), format_sig(&self.im, digits))
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2).floor() as usize;
        let (re, im) = self.to_decimal(digits.max(1));
        if self.im.is_zero() {
            write!(f, "{re}")
        } else {
            write!(f, "{re},{im}")
        }
    }
}

impl PartialEq for BigComplex {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: Self) -> BigComplex {
        let p = self.prec.max(rhs.prec);
        BigComplex::new(self.re.add(&rhs.re, p, RM), self.im.add(&rhs.im, p, RM), p)
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: Self) -> BigComplex {
        let p = self.prec.max(rhs.prec);
        BigComplex::new(self.re.sub(&rhs.re, p, RM), self.im.sub(&rhs.im, p, RM), p)
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: Self) -> BigComplex {
        let p = self.prec.max(rhs.prec);
        if self.im.is_zero() && rhs.im.is_zero() {
            return BigComplex::real(self.re.mul(&rhs.re, p, RM), p);
        }
        let w = p + 4;
        let re = self.re.mul(&rhs.re, w, RM).sub(&self.im.mul(&rhs.im, w, RM), p, RM);
        let im = self.re.mul(&rhs.im, w, RM).add(&self.im.mul(&rhs.re, w, RM), p, RM);
        BigComplex::new(re, im, p)
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> BigComplex {
        let p = self.prec.max(rhs.prec);
        if rhs.im.is_zero() {
            return BigComplex::new(self.re.div(&rhs.re, p, RM), self.im.div(&rhs.re, p, RM), p);
        }
        let w = p + 8;
        let n = rhs.norm_sqr();
        let re = self.re.mul(&rhs.re, w, RM).add(&self.im.mul(&rhs.im, w, RM), w, RM);
        let im = self.im.mul(&rhs.re, w, RM).sub(&self.re.mul(&rhs.im, w, RM), w, RM);
        BigComplex::new(re.div(&n, p, RM), im.div(&n, p, RM), p)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(BigFloat::neg(&self.re), BigFloat::neg(&self.im), self.prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn conversions_round_trip() {
        let big = BigInt::parse_bytes(b"-123456789012345678901234567890", 10).unwrap();
        let x = bigint_to_float(&big);
        assert_eq!(integral_to_bigint(&x), big);
        assert_eq!(to_f64(&rational_to_float(&rat(3, 8), 64)), 0.375);
        assert_eq!(to_f64(&int_f(-5, 64)), -5.0);
        assert!((log2_abs(&int_f(1024, 64)) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_sig(&int_f(12345, 64), 3), "1.23e4");
        assert_eq!(format_sig(&rational_to_float(&rat(-1, 8), 64), 4), "-1.250e-1");
        assert_eq!(format_sig(&int_f(9999, 64), 2), "1.0e4");
        assert_eq!(format_sig(&pi(128), 30), "3.14159265358979323846264338328e0");
    }

    #[test]
    fn complex_arithmetic() {
        let z = BigComplex::parse("3,4", 128).unwrap();
        assert_eq!(to_f64(&z.abs()), 5.0);
        let w = &z / &z;
        assert!((w.re_f64() - 1.0).abs() < 1e-30 && w.im_f64().abs() < 1e-30);
        let e = BigComplex::parse("0,3.14159265358979323846264338327950288", 128).unwrap().exp();
        assert!((e.re_f64() + 1.0).abs() < 1e-30);
        let l = z.ln();
        assert!((l.re_f64() - 5f64.ln()).abs() < 1e-15);
        assert!((l.im_f64() - (4f64).atan2(3.0)).abs() < 1e-15);
        let s = BigComplex::parse("-3,-4", 128).unwrap().sqrt();
        assert!((s.re_f64() - 1.0).abs() < 1e-30 && (s.im_f64() + 2.0).abs() < 1e-30);
        assert_eq!(z.powi(-2).re_f64(), (-7.0) / 625.0);
        assert!(BigComplex::parse("1,x", 64).is_err());
    }
}

//! Polynomials in `phi` whose coefficients are rationals times integer
//! powers of a symbolic `pi`.
//!
//! `pi` is never approximated here; numeric substitution lives in
//! [`crate::series`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// `sum c_{a,b} phi^a pi^b` with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PiPolynomial {
    terms: BTreeMap<(i32, i32), Rational>,
}

/// `sum c_b pi^b`, an exact element of `Q[pi, 1/pi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PiNumber {
    terms: BTreeMap<i32, Rational>,
}

// ---- PiNumber ----

impl PiNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// `c pi^b`.
    pub fn monomial(c: Rational, b: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(b, c);
        p
    }

    pub fn add_term(&mut self, b: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(b).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: i32) -> Rational {
        self.terms.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending `pi` power.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i32, &Rational)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Exact division by a nonzero monomial.
    pub fn div_monomial(&self, c: &Rational, b: i32) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("division by a zero monomial".into()));
        }
        let mut out = Self::zero();
        for (bb, cc) in self.terms() {
            out.add_term(bb - b, cc / c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (b, cc) in self.terms() {
            out.add_term(b, cc * c);
        }
        out
    }

    /// Canonical text: `c * pi^b` terms in descending `pi` power.
    pub fn to_canonical(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms.iter().rev().map(|(b, c)| format!("{c} * pi^{b}")).collect::<Vec<_>>().join(" + ")
    }

    pub fn parse_canonical(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = Self::zero();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let parts: Vec<&str> = term.split(" * ").map(str::trim).collect();
            let [c, p] = parts[..] else {
                return Err(Error::Parse(format!("malformed term `{term}`")));
            };
            out.add_term(parse_power(p, "pi")?, parse_rational(c)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (b, c) in self.terms.iter().rev() {
            map.insert(b.to_string(), coeff_json(c, *b));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let mut out = Self::zero();
        for (k, val) in obj {
            let b: i32 = k.parse().map_err(|_| Error::Parse(format!("bad pi power key `{k}`")))?;
            let (c, pb) = coeff_from_json(val)?;
            if pb != b {
                return Err(Error::Parse(format!("pi_pow {pb} disagrees with key `{k}`")));
            }
            out.add_term(b, c);
        }
        Ok(out)
    }
}

impl Add for &PiNumber {
    type Output = PiNumber;
    fn add(self, rhs: Self) -> PiNumber {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c.clone());
        }
        out
    }
}

impl Sub for &PiNumber {
    type Output = PiNumber;
    fn sub(self, rhs: Self) -> PiNumber {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, -c);
        }
        out
    }
}

impl Mul for &PiNumber {
    type Output = PiNumber;
    fn mul(self, rhs: Self) -> PiNumber {
        let mut out = PiNumber::zero();
        for (b1, c1) in self.terms() {
            for (b2, c2) in rhs.terms() {
                out.add_term(b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &PiNumber {
    type Output = PiNumber;
    fn neg(self) -> PiNumber {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for PiNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i32, i32, &Rational)> = self.terms.iter().rev().map(|(b, c)| (0, *b, c)).collect();
        write_pretty(f, &terms)
    }
}

// ---- PiPolynomial ----

impl PiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c phi^a pi^b`.
    pub fn monomial(c: Rational, a: i32, b: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn add_term(&mut self, a: i32, b: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i32, b: i32) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms as `(phi_power, pi_power, coefficient)` in ascending key order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &Rational)> {
        self.terms.iter().map(|((a, b), c)| (*a, *b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (a, b, cc) in self.terms() {
            out.add_term(a, b, cc * c);
        }
        out
    }

    /// Multiply by `c phi^a pi^b`.
    pub fn shift(&self, c: &Rational, a: i32, b: i32) -> Self {
        let mut out = Self::zero();
        for (aa, bb, cc) in self.terms() {
            out.add_term(aa + a, bb + b, cc * c);
        }
        out
    }

    /// Largest power of `phi`, or `None` for the zero polynomial.
    pub fn phi_degree(&self) -> Option<i32> {
        self.terms.keys().map(|(a, _)| *a).max()
    }

    /// Common value of `phi_power + pi_power`, if there is one.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|(a, b)| a + b);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// The coefficient of `phi^a` as a [`PiNumber`].
    pub fn phi_coeff(&self, a: i32) -> PiNumber {
        let mut out = PiNumber::zero();
        for (aa, b, c) in self.terms() {
            if aa == a {
                out.add_term(b, c.clone());
            }
        }
        out
    }

    /// Substitute `phi^2 := c pi^b`; every `phi` power must be even.
    pub fn substitute_phi_sq(&self, c: &Rational, b: i32) -> Result<PiNumber> {
        let mut out = PiNumber::zero();
        for (a, bb, cc) in self.terms() {
            if a % 2 != 0 || a < 0 {
                return Err(Error::Domain(format!("phi^{a} is not a nonnegative even power")));
            }
            let h = (a / 2) as u32;
            out.add_term(bb + b * h as i32, cc * num_traits::pow(c.clone(), h as usize));
        }
        Ok(out)
    }

    /// Canonical text: `c * phi^a * pi^b` terms, descending in `phi` power
    /// and then in `pi` power.
    pub fn to_canonical(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms.iter().rev().map(|((a, b), c)| format!("{c} * phi^{a} * pi^{b}")).collect::<Vec<_>>().join(" + ")
    }

    pub fn parse_canonical(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = Self::zero();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let parts: Vec<&str> = term.split(" * ").map(str::trim).collect();
            let [c, a, b] = parts[..] else {
                return Err(Error::Parse(format!("malformed term `{term}`")));
            };
            out.add_term(parse_power(a, "phi")?, parse_power(b, "pi")?, parse_rational(c)?);
        }
        Ok(out)
    }

    /// JSON object keyed by `"a,b"`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for ((a, b), c) in self.terms.iter().rev() {
            map.insert(format!("{a},{b}"), coeff_json(c, *b));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let mut out = Self::zero();
        for (k, val) in obj {
            let (a, b) = k
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("bad term key `{k}`")))?;
            let (c, pb) = coeff_from_json(val)?;
            if pb != b {
                return Err(Error::Parse(format!("pi_pow {pb} disagrees with key `{k}`")));
            }
            out.add_term(a, b, c);
        }
        Ok(out)
    }
}

impl Add for &PiPolynomial {
    type Output = PiPolynomial;
    fn add(self, rhs: Self) -> PiPolynomial {
        let mut out = self.clone();
        for (a, b, c) in rhs.terms() {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &PiPolynomial {
    type Output = PiPolynomial;
    fn sub(self, rhs: Self) -> PiPolynomial {
        let mut out = self.clone();
        for (a, b, c) in rhs.terms() {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul for &PiPolynomial {
    type Output = PiPolynomial;
    fn mul(self, rhs: Self) -> PiPolynomial {
        let mut out = PiPolynomial::zero();
        for (a1, b1, c1) in self.terms() {
            for (a2, b2, c2) in rhs.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &PiPolynomial {
    type Output = PiPolynomial;
    fn neg(self) -> PiPolynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for PiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i32, i32, &Rational)> = self.terms().collect();
        terms.sort_by_key(|t| std::cmp::Reverse((t.0, t.1)));
        write_pretty(f, &terms)
    }
}

impl Serialize for PiPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.to_json();
        let obj = v.as_object().expect("object");
        let mut map = s.serialize_map(Some(obj.len()))?;
        for (k, val) in obj {
            map.serialize_entry(k, val)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for PiPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        PiPolynomial::from_json(&v).map_err(de::Error::custom)
    }
}

impl Serialize for PiNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        PiNumber::from_json(&v).map_err(de::Error::custom)
    }
}

// ---- Text helpers ----

/// `{"num", "den", "pi_pow"}` for one exact coefficient `c pi^b`.
pub fn coeff_json(c: &Rational, b: i32) -> Value {
    json!({"num": c.numer().to_string(), "den": c.denom().to_string(), "pi_pow": b})
}

fn coeff_from_json(v: &Value) -> Result<(Rational, i32)> {
    let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field `{k}`")));
    let big = |x: &Value| -> Result<BigInt> {
        match x {
            Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`"))),
            Value::Number(n) => n.to_string().parse().map_err(|_| Error::Parse(format!("bad integer `{n}`"))),
            _ => Err(Error::Parse("expected an integer".into())),
        }
    };
    let num = big(field("num")?)?;
    let den = big(field("den")?)?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    let b = field("pi_pow")?.as_i64().ok_or_else(|| Error::Parse("pi_pow must be an integer".into()))?;
    Ok((Rational::new(num, den), b as i32))
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_power(s: &str, sym: &str) -> Result<i32> {
    s.strip_prefix(sym)
        .and_then(|r| r.strip_prefix('^'))
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `{sym}^k`, got `{s}`")))
}

/// Human form, e.g. `−11/90·phi^4 − 4/9·pi^2·phi^2 + 8/45·pi^4`.
fn write_pretty(f: &mut fmt::Formatter<'_>, terms: &[(i32, i32, &Rational)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (a, b, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (idx, neg) {
            (0, true) => write!(f, "\u{2212}")?,
            (0, false) => {}
            (_, true) => write!(f, " \u{2212} ")?,
            (_, false) => write!(f, " + ")?,
        }
        let mut factors = Vec::new();
        let mag = c.abs();
        if !mag.is_one() || (*a == 0 && *b == 0) {
            factors.push(mag.to_string());
        }
        match b {
            0 => {}
            1 => factors.push("pi".into()),
            _ => factors.push(format!("pi^{b}")),
        }
        match a {
            0 => {}
            1 => factors.push("phi".into()),
            _ => factors.push(format!("phi^{a}")),
        }
        write!(f, "{}", factors.join("\u{b7}"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn b4() -> PiPolynomial {
        let mut p = PiPolynomial::zero();
        p.add_term(4, 0, rat(-11, 90));
        p.add_term(2, 2, rat(-4, 9));
        p.add_term(0, 4, rat(8, 45));
        p
    }

    #[test]
    fn pretty_form() {
        assert_eq!(b4().to_string(), "\u{2212}11/90\u{b7}phi^4 \u{2212} 4/9\u{b7}pi^2\u{b7}phi^2 + 8/45\u{b7}pi^4");
        assert_eq!(PiPolynomial::zero().to_string(), "0");
        assert_eq!(PiNumber::monomial(rat(1, 64), -4).to_string(), "1/64\u{b7}pi^-4");
    }

    #[test]
    fn canonical_round_trip() {
        let p = b4();
        let text = p.to_canonical();
        assert_eq!(text, "-11/90 * phi^4 * pi^0 + -4/9 * phi^2 * pi^2 + 8/45 * phi^0 * pi^4");
        assert_eq!(PiPolynomial::parse_canonical(&text).unwrap(), p);
        assert_eq!(PiPolynomial::parse_canonical("0").unwrap(), PiPolynomial::zero());
    }

    #[test]
    fn json_round_trip() {
        let p = b4();
        let v = p.to_json();
        assert_eq!(v["2,2"]["num"], "-4");
        assert_eq!(v["2,2"]["pi_pow"], 2);
        assert_eq!(PiPolynomial::from_json(&v).unwrap(), p);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<PiPolynomial>(&s).unwrap(), p);
        let n = PiNumber::monomial(rat(3, 2048), -8);
        assert_eq!(PiNumber::from_json(&n.to_json()).unwrap(), n);
    }

    #[test]
    fn substitution_and_homogeneity() {
        let mut p = PiPolynomial::zero();
        p.add_term(2, 0, rat(1, 6));
        p.add_term(0, 2, rat(2, 3));
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert!(p.substitute_phi_sq(&int(-4), 2).unwrap().is_zero());
        assert!(b4().substitute_phi_sq(&int(-4), 2).unwrap().is_zero());
    }

    #[test]
    fn arithmetic_cancels() {
        let p = b4();
        assert!((&p - &p).is_zero());
        assert_eq!(&p + &p, p.scale(&int(2)));
        let q = PiPolynomial::monomial(int(1), 1, 0);
        assert_eq!((&p * &q).phi_degree(), Some(5));
    }
}

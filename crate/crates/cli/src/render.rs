//! Parsing of complex arguments and small output helpers.

use hypseries::bigc::{parse_float, pi, BigComplex, RM};
use hypseries::{BigFloat, PiPolynomial, Rational};
use serde_json::{json, Value};

use crate::{CliError, CliResult};

/// Extra bits used when parsing decimal input.
const PARSE_GUARD: usize = 64;

/// One component: a decimal, optionally followed by `pi` (`2pi`, `-pi`, `0.5pi`).
fn parse_component(s: &str, p: usize) -> CliResult<BigFloat> {
    let s = s.trim();
    match s.strip_suffix("pi") {
        Some(head) => {
            let factor = match head.trim() {
                "" | "+" => BigFloat::from_i64(1, p),
                "-" | "\u{2212}" => BigFloat::from_i64(-1, p),
                h => parse_float(h, p)?,
            };
            Ok(factor.mul(&pi(p), p, RM))
        }
        None => Ok(parse_float(s, p)?),
    }
}

/// `re[,im]` at `prec + 64` bits.
pub fn parse_phi(s: &str, prec: usize) -> CliResult<BigComplex> {
    let p = prec + PARSE_GUARD;
    let (re, im) = match s.split_once(',') {
        Some((a, b)) => (a, b),
        None => (s, "0"),
    };
    if re.trim().is_empty() {
        return Err(CliError::Usage(format!("--phi `{s}`: expected `re[,im]`")));
    }
    Ok(BigComplex::new(parse_component(re, p)?, parse_component(im, p)?, p))
}

/// Significant decimal digits carried by `prec` bits.
pub fn digits(prec: usize) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize
}

pub fn rational_json(q: &Rational) -> Value {
    json!({"num": q.numer().to_string(), "den": q.denom().to_string()})
}

/// Term rows `phi_pow,pi_pow,num,den` in descending `phi` power.
pub fn pipoly_csv_rows(p: &PiPolynomial, prefix: &str, out: &mut String) {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|t| std::cmp::Reverse((t.0, t.1)));
    for (a, b, c) in terms {
        out.push_str(&format!("{prefix}{a},{b},{},{}\n", c.numer(), c.denom()));
    }
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn phi_json(z: &BigComplex, digits: usize) -> Value {
    let (re, im) = z.to_decimal(digits);
    json!([re, im])
}

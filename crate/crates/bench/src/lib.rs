//! Shared inputs for the criterion benchmarks.

use hypseries::BigComplex;

/// Evaluation points: real, complex, small and large modulus.
pub const PHIS: [&str; 4] = ["1", "2,1", "0.25", "9"];

pub fn phi(s: &str, prec: usize) -> BigComplex {
    BigComplex::parse(s, prec + 64).expect("valid point")
}

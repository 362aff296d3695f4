//! Hyperbolic series `S_{2m+2}(phi) = sum_n phi^{2m+2} / sinh^{2m+2}(n phi / 2)`,
//! their Lambert-series representations and modular functional equations.
//!
//! The crate is split into an exact layer (rationals, Bernoulli numbers,
//! coefficient tables, polynomials with symbolic `pi`) and a numeric layer
//! (arbitrary-precision summation, relation checks, polynomial zeros).

pub mod bernoulli;
pub mod bigc;
pub mod coefficients;
pub mod error;
pub mod exact;
pub mod identities;
pub mod pipoly;
pub mod polynomials;
pub mod ratpoly;
pub mod relations;
pub mod series;
pub mod zeros;

pub use astro_float::BigFloat;
pub use bigc::BigComplex;
pub use coefficients::{CoeffKind, CoeffTable, Route};
pub use error::{Error, Result};
pub use exact::Rational;
pub use identities::{identity_suite, IdentityCheck};
pub use pipoly::{PiNumber, PiPolynomial};
pub use polynomials::{Symbol, SymbolicPolynomial};
pub use ratpoly::RationalPolynomial;
pub use relations::{ReductionKind, RelationId, RelationReport, Status};
pub use series::SeriesValue;
pub use zeros::{ZeroChecks, ZeroSet};

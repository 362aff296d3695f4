//! Complex zeros of the `B_{2m+2}` polynomials.
//!
//! Roots are located in the rescaled variable `psi = phi / pi`, where the
//! polynomial has exact rational coefficients. An `f64` Aberth iteration
//! supplies starting values, and a big-float Aberth iteration finishes them.

use std::fmt::Write as _;

use astro_float::BigFloat;
use num_complex::Complex64;
use serde::Serialize;

use crate::bigc::{format_sig, log2_abs, pi, rational_to_float, to_f64, BigComplex, RM};
use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::polynomials::calB;
use crate::ratpoly::RationalPolynomial;
use crate::series::eval_pi_poly;

/// Iteration caps of the two Aberth stages.
const F64_ITER_CAP: usize = 500;
const BIG_ITER_CAP: usize = 80;

/// `true` iff `B_{2m+2}` vanishes identically at `phi^2 = -4 pi^2`.
pub fn verify_unruh_zero(m: usize) -> bool {
    calB(m).substitute_phi_sq(&int(-4), 2).map(|v| v.is_zero()).unwrap_or(false)
}

/// `P(psi)` with `B_{2m+2}(pi psi) = pi^{2m+2} P(psi)`.
pub fn psi_polynomial(m: usize) -> RationalPolynomial {
    let b = calB(m);
    let deg = 2 * m + 2;
    let mut coeffs = vec![Rational::from_integer(0.into()); deg + 1];
    for (a, _, c) in b.terms() {
        coeffs[a as usize] += c;
    }
    RationalPolynomial::new(coeffs)
}

/// Zeros of one `B_{2m+2}` in the `phi` plane.
#[derive(Debug, Clone)]
pub struct ZeroSet {
    pub m: usize,
    /// Sorted by descending imaginary part, then ascending real part.
    pub zeros: Vec<BigComplex>,
    /// `|B_{2m+2}(z)|` at each zero, evaluated at the working precision.
    pub residuals: Vec<BigFloat>,
    pub method: String,
    /// Target precision requested by the caller.
    pub prec: usize,
}

/// Checks run on a [`ZeroSet`]; all `log2` values are of absolute or
/// relative errors as named.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroChecks {
    pub m: usize,
    pub count: usize,
    pub max_residual_log2: f64,
    /// Largest distance from `-z` or `conj z` to its nearest partner.
    pub symmetry_log2: f64,
    /// Relative error of `lead * prod z` against the constant term.
    pub vieta_log2: f64,
    pub min_unit_circle_distance: f64,
    pub contains_unruh: bool,
}

impl ZeroChecks {
    /// Residuals below `2^{-prec/2}`, symmetry within `2^{-prec/4}`, Vieta
    /// within `2^{-prec/2}` and no zero within `1e-6` of the unit circle.
    pub fn pass(&self, prec: usize) -> bool {
        let half = -(prec as f64) / 2.0;
        self.count > 0
            && self.max_residual_log2 < half
            && self.symmetry_log2 < -(prec as f64) / 4.0
            && self.vieta_log2 < half
            && self.min_unit_circle_distance > 1e-6
            && self.contains_unruh
    }
}

impl ZeroSet {
    pub fn degree(&self) -> usize {
        2 * self.m + 2
    }

    pub fn max_residual_log2(&self) -> f64 {
        self.residuals.iter().map(log2_abs).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Worst distance between `-z` (or `conj z`) and the closest zero.
    pub fn symmetry_log2(&self) -> f64 {
        let mut worst = f64::NEG_INFINITY;
        for z in &self.zeros {
            for image in [-z, z.conj()] {
                let best = self.zeros.iter().map(|w| (&image - w).log2_abs()).fold(f64::INFINITY, f64::min);
                worst = worst.max(best);
            }
        }
        worst
    }

    /// Relative mismatch of `lead * prod z` and the constant term of
    /// `B_{2m+2}` (the degree is even, so no sign flip).
    pub fn vieta_log2(&self) -> f64 {
        let w = self.zeros.first().map(|z| z.prec()).unwrap_or(self.prec);
        let b = calB(self.m);
        let deg = self.degree() as i32;
        let lead = b.phi_coeff(deg);
        let constant = b.phi_coeff(0);
        let mut prod = BigComplex::one(w);
        for z in &self.zeros {
            prod = &prod * z;
        }
        let lead_f = crate::series::eval_pi_number(&lead, w);
        let const_f = crate::series::eval_pi_number(&constant, w);
        let lhs = prod.scale(&lead_f);
        let rhs = BigComplex::real(const_f, w);
        let diff = (&lhs - &rhs).log2_abs();
        diff - rhs.log2_abs()
    }

    pub fn min_unit_circle_distance(&self) -> f64 {
        self.zeros.iter().map(|z| (z.abs_f64() - 1.0).abs()).fold(f64::INFINITY, f64::min)
    }

    /// Whether both `+-2 pi i` are among the zeros to `2^{-prec/2}`.
    pub fn contains_unruh(&self) -> bool {
        let w = self.zeros.first().map(|z| z.prec()).unwrap_or(self.prec);
        let two_pi = pi(w).mul(&BigFloat::from_i64(2, w), w, RM);
        let targets = [
            BigComplex::new(BigFloat::from_i64(0, w), two_pi.clone(), w),
            BigComplex::new(BigFloat::from_i64(0, w), BigFloat::neg(&two_pi), w),
        ];
        let tol = -(self.prec as f64) / 2.0;
        targets.iter().all(|t| self.zeros.iter().any(|z| (z - t).log2_abs() < tol))
    }

    pub fn checks(&self) -> ZeroChecks {
        ZeroChecks {
            m: self.m,
            count: self.zeros.len(),
            max_residual_log2: self.max_residual_log2(),
            symmetry_log2: self.symmetry_log2(),
            vieta_log2: self.vieta_log2(),
            min_unit_circle_distance: self.min_unit_circle_distance(),
            contains_unruh: self.contains_unruh(),
        }
    }
}

// ---- Root finding ----

fn aberth_f64(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let eval = |z: Complex64| {
        let mut p = Complex64::new(coeffs[n], 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in coeffs[..n].iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    let radius = (coeffs[0].abs() / coeffs[n].abs()).powf(1.0 / n as f64).max(1e-3);
    // off-axis, slightly spread start so the even symmetry cannot trap iterates
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * (1.0 + 0.05 * k as f64 / n as f64), t)
        })
        .collect();
    for _ in 0..F64_ITER_CAP {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let repel: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repel);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if worst < 1e-14 {
            break;
        }
    }
    z
}

fn horner(coeffs: &[BigFloat], z: &BigComplex, w: usize) -> (BigComplex, BigComplex) {
    let n = coeffs.len() - 1;
    let mut p = BigComplex::real(coeffs[n].clone(), w);
    let mut dp = BigComplex::zero(w);
    for c in coeffs[..n].iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + &BigComplex::real(c.clone(), w);
    }
    (p, dp)
}

/// Big-float Aberth refinement; returns the final worst relative step.
fn aberth_big(coeffs: &[BigFloat], z: &mut [BigComplex], w: usize) -> f64 {
    let n = z.len();
    let one = BigComplex::one(w);
    let mut worst = f64::INFINITY;
    for _ in 0..BIG_ITER_CAP {
        worst = f64::NEG_INFINITY;
        for k in 0..n {
            let (p, dp) = horner(coeffs, &z[k], w);
            if p.is_zero() {
                continue;
            }
            let ratio = &p / &dp;
            let mut repel = BigComplex::zero(w);
            for j in 0..n {
                if j != k {
                    repel = &repel + &(&z[k] - &z[j]).recip();
                }
            }
            let step = &ratio / &(&one - &(&ratio * &repel));
            z[k] = &z[k] - &step;
            worst = worst.max(step.log2_abs() - z[k].log2_abs().max(0.0));
        }
        if worst < -(w as f64 - 24.0) {
            break;
        }
    }
    worst
}

/// Drop an imaginary (real) part that is pure rounding noise, so that real
/// and imaginary zeros are represented exactly on their axis.
fn snap_to_axes(z: &BigComplex, noise_log2: f64) -> BigComplex {
    let w = z.prec();
    let mag = z.log2_abs();
    let zero = BigFloat::from_i64(0, w);
    if log2_abs(z.im()) < mag + noise_log2 {
        BigComplex::new(z.re().clone(), zero, w)
    } else if log2_abs(z.re()) < mag + noise_log2 {
        BigComplex::new(zero, z.im().clone(), w)
    } else {
        z.clone()
    }
}

/// All `2m+2` zeros of `B_{2m+2}` with `|B_{2m+2}(z)| < 2^{-prec/2}`.
pub fn find_zeros(m: usize, prec: usize) -> Result<ZeroSet> {
    crate::bigc::check_prec(prec)?;
    let poly = psi_polynomial(m);
    let coeffs_f64: Vec<f64> = poly.coeffs().iter().map(|c| to_f64(&rational_to_float(c, 64))).collect();
    let start = aberth_f64(&coeffs_f64);

    // headroom for cancellation in |B(z)| = pi^{2m+2} |P(psi)|
    let rmax = start.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let scale: f64 = coeffs_f64.iter().enumerate().map(|(k, c)| c.abs() * rmax.powi(k as i32)).sum::<f64>()
        * std::f64::consts::PI.powi(2 * m as i32 + 2);
    let w = prec + 64 + scale.log2().max(0.0).ceil() as usize;

    let coeffs: Vec<BigFloat> = poly.coeffs().iter().map(|c| rational_to_float(c, w)).collect();
    let mut psi: Vec<BigComplex> = start.iter().map(|z| BigComplex::from_f64(z.re, z.im, w)).collect();
    aberth_big(&coeffs, &mut psi, w);

    let pi_w = pi(w);
    let b = calB(m);
    let noise = -(w as f64) / 2.0;
    let mut zeros: Vec<BigComplex> = psi.iter().map(|z| snap_to_axes(&z.scale(&pi_w), noise)).collect();
    zeros.sort_by(|a, b| {
        b.im()
            .partial_cmp(a.im())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.re().partial_cmp(b.re()).unwrap_or(std::cmp::Ordering::Equal))
    });
    let residuals: Vec<BigFloat> = zeros.iter().map(|z| eval_pi_poly(&b, z, w).abs()).collect();
    let set = ZeroSet { m, zeros, residuals, method: format!("aberth f64 -> aberth {w}-bit on psi = phi/pi"), prec };
    if set.max_residual_log2() >= -(prec as f64) / 2.0 {
        return Err(Error::Convergence { m });
    }
    Ok(set)
}

/// Zero sets for `m = 0..=m_max`.
pub fn zeros_dataset(m_max: usize, prec: usize) -> Result<Vec<ZeroSet>> {
    (0..=m_max).map(|m| find_zeros(m, prec)).collect()
}

// ---- CSV ----

pub const CSV_HEADER: &str = "m,re,im,residual";

/// Rows `m,re,im,residual` with `prec/4` significant digits, header first.
pub fn to_csv(sets: &[ZeroSet]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for set in sets {
        let digits = (set.prec / 4).max(1);
        for (z, r) in set.zeros.iter().zip(&set.residuals) {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                set.m,
                format_sig(z.re(), digits),
                format_sig(z.im(), digits),
                format_sig(r, digits)
            );
        }
    }
    out
}

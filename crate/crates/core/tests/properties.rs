//! Randomized invariants of the exact and numeric layers.

use hypseries::bernoulli::bernoulli_numbers;
use hypseries::bernoulli::{bernoulli_poly_eval, gen_bernoulli_via_bell, reduced_even};
use hypseries::bigc::BigComplex;
use hypseries::coefficients::{c_table, d_table};
use hypseries::exact::{bell_incomplete, factorial, harmonic, pochhammer, rat, stirling_first};
use hypseries::identities::bernoulli_convolution_sum;
use hypseries::polynomials::{calA, calB};
use hypseries::series::{eval_S, eval_S_sinh, eval_S_truncated, eval_S_via_lambert};
use hypseries::zeros::verify_unruh_zero;
use hypseries::{PiPolynomial, Rational, Route};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
}

fn pipoly() -> impl Strategy<Value = PiPolynomial> {
    proptest::collection::vec((0i32..8, -6i32..7, rational()), 0..6).prop_map(|terms| {
        let mut p = PiPolynomial::zero();
        for (a, b, c) in terms {
            p.add_term(a, 2 * b, c);
        }
        p
    })
}

fn phi_point() -> impl Strategy<Value = (f64, f64)> {
    (0.5f64..5.0, -3.0f64..3.0, any::<bool>()).prop_map(|(re, im, neg)| if neg { (-re, im) } else { (re, im) })
}

fn big(re: f64, im: f64, p: usize) -> BigComplex {
    BigComplex::from_f64(re, im, p)
}

fn rel_log2(a: &BigComplex, b: &BigComplex) -> f64 {
    (a - b).log2_abs() - b.log2_abs().max(0.0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, .. ProptestConfig::default() })]

    // ---- exact layer ----

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !b.is_zero() {
            prop_assert_eq!(&a / &b * &b, a.clone());
        }
    }

    #[test]
    fn pipoly_ring_and_text_round_trip(p in pipoly(), q in pipoly(), r in pipoly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(PiPolynomial::parse_canonical(&p.to_canonical()).unwrap(), p.clone());
        prop_assert_eq!(PiPolynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn pochhammer_splits(x in rational(), n in 0usize..20, m in 0usize..20) {
        let xn = &x + Rational::from_integer(BigInt::from(n));
        prop_assert_eq!(pochhammer(&x, n) * pochhammer(&xn, m), pochhammer(&x, n + m));
    }

    #[test]
    fn bell_extremes(xs in proptest::collection::vec(rational(), 1..21)) {
        let n = xs.len();
        prop_assert_eq!(bell_incomplete(n, n, &xs[..1]).unwrap(), num_traits::pow(xs[0].clone(), n));
        prop_assert_eq!(bell_incomplete(n, 1, &xs).unwrap(), xs[n - 1].clone());
    }

    #[test]
    fn harmonic_step(m in 1usize..60, r in 1u32..6) {
        let step = harmonic(m, r) - harmonic(m - 1, r);
        prop_assert_eq!(step, Rational::new(BigInt::one(), BigInt::from(m).pow(r)));
    }

    #[test]
    fn bernoulli_reflection(n in 0usize..30, t in rational()) {
        let one_minus = Rational::one() - &t;
        let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
        prop_assert_eq!(bernoulli_poly_eval(n, &one_minus), sign * bernoulli_poly_eval(n, &t));
    }

    #[test]
    fn bell_route_matches_reduced(n in 1usize..14, m in 0usize..8) {
        prop_assert_eq!(gen_bernoulli_via_bell(n, m).unwrap(), reduced_even(n, m));
    }

    #[test]
    fn convolution_identity_vanishes(m in 0usize..40) {
        let b = bernoulli_numbers(2 * m + 2);
        prop_assert!(bernoulli_convolution_sum(m, &b).is_zero());
    }

    #[test]
    fn coefficient_routes_agree(m in 0usize..14) {
        let c0 = c_table(m, Route::BinomialExpansion).unwrap();
        let d0 = d_table(m, Route::BinomialExpansion).unwrap();
        for r in [Route::GenBernoulli, Route::StirlingBernoulli] {
            prop_assert_eq!(&c_table(m, r).unwrap().values, &c0.values);
            prop_assert_eq!(&d_table(m, r).unwrap().values, &d0.values);
        }
    }

    #[test]
    fn calb_facts(m in 0usize..14) {
        let b = calB(m);
        prop_assert_eq!(calA(m), b.clone());
        prop_assert_eq!(b.homogeneous_degree(), Some(2 * m as i32 + 2));
        prop_assert!(verify_unruh_zero(m));
    }

    // ---- numeric layer ----

    #[test]
    fn tail_bound_is_sound(m in 0usize..5, (re, im) in phi_point(), hi in any::<bool>()) {
        let prec = if hi { 128 } else { 64 };
        let z = big(re, im, prec + 64);
        let v = eval_S(m, &z, prec).unwrap();
        let longer = eval_S_truncated(m, &z, 4 * v.terms_used, prec + 64).unwrap();
        let diff = (&v.value - &longer.value).log2_abs();
        // rounding of the working sum sits far below the tail target
        let rounding = v.value.log2_abs() - (prec as f64 + 24.0);
        prop_assert!(diff <= v.tail_log2.max(rounding) + 1e-9, "diff {} tail {}", diff, v.tail_log2);
    }

    #[test]
    fn precision_monotone((re, im) in phi_point(), m in 0usize..5) {
        let z = big(re, im, 320);
        let a = eval_S(m, &z, 128).unwrap().value;
        let b = eval_S(m, &z, 256).unwrap().value;
        prop_assert!(rel_log2(&a, &b) < -120.0);
    }

    #[test]
    fn parity_in_phi((re, im) in phi_point(), m in 0usize..4) {
        let z = big(re, im, 192);
        let nz = -&z;
        let s = eval_S(m, &z, 128).unwrap().value;
        let sn = eval_S(m, &nz, 128).unwrap().value;
        prop_assert!(rel_log2(&s, &sn) < -120.0);
        let h = eval_S_sinh(m, 1, &z, 128).unwrap().value;
        let hn = eval_S_sinh(m, 1, &nz, 128).unwrap().value;
        let sum = &h + &hn;
        prop_assert!(sum.log2_abs() < h.log2_abs().max(0.0) - 120.0);
    }

    #[test]
    fn lambert_linearity((re, im) in phi_point(), m in 0usize..5) {
        let z = big(re, im, 192);
        let a = eval_S(m, &z, 128).unwrap().value;
        let b = eval_S_via_lambert(m, &z, 128).unwrap().value;
        prop_assert!(rel_log2(&a, &b) < -120.0);
    }
}

#[test]
fn stirling_row_sums() {
    for n in 0..=30usize {
        let abs: BigInt = (0..=n).map(|k| stirling_first(n, k).abs()).sum();
        assert_eq!(abs, factorial(n), "n={n}");
        let signed: BigInt = (0..=n).map(|k| stirling_first(n, k)).sum();
        assert_eq!(signed, if n <= 1 { BigInt::one() } else { BigInt::zero() }, "n={n}");
    }
}

//! Functional equations, linearity and reductions on concrete points.

use hypseries::bigc::{pi, BigComplex, RM};
use hypseries::exact::rat;
use hypseries::polynomials::{calB, calS, odd_power_coefficient};
use hypseries::relations::{
    check_asymptotic_S, check_asymptotic_sinh, check_exp_representation, check_funcrel_S, check_lambert_neg,
    check_lambert_pos, check_linearity, check_reduction, check_sinh_linearity, modular_image, threshold_log2,
};
use hypseries::{BigFloat, Error, PiPolynomial, ReductionKind, RelationId, Status};

const PREC: usize = 128;

fn z(s: &str) -> BigComplex {
    BigComplex::parse(s, PREC + 64).unwrap()
}

fn two_pi() -> BigComplex {
    let w = PREC + 64;
    BigComplex::real(pi(w).mul(&BigFloat::from_i64(2, w), w, RM), w)
}

fn poly(terms: &[(i32, i32, i64, i64)]) -> PiPolynomial {
    let mut p = PiPolynomial::zero();
    for &(a, b, n, d) in terms {
        p.add_term(a, b, rat(n, d));
    }
    p
}

// ---- The two fully displayed relations, symbolically ----

#[test]
fn order_zero_relation_symbolic() {
    // S_2(phi) + phi^2/(4 pi^2) S_2(4 pi^2/phi) = phi^2/6 + 2 pi^2/3 - 2 phi
    assert_eq!(calS(0), vec![poly(&[(2, -2, -1, 4)])]);
    assert_eq!(calB(0), poly(&[(2, 0, 1, 6), (0, 2, 2, 3)]));
    assert_eq!(odd_power_coefficient(0), rat(-2, 1));
}

#[test]
fn order_one_relation_symbolic() {
    let s = calS(1);
    assert_eq!(s[0], poly(&[(4, -2, 1, 6), (2, 0, 2, 3)]));
    assert_eq!(s[1], poly(&[(4, -4, 1, 16)]));
    assert_eq!(calB(1), poly(&[(4, 0, -11, 90), (2, 2, -4, 9), (0, 4, 8, 45)]));
    assert_eq!(odd_power_coefficient(1), rat(4, 3));
}

#[test]
fn odd_power_coefficients_follow_factorial_ratio() {
    // (-1)^{m+1} 2^{2m+1} (m!)^2 / (2m+1)!
    assert_eq!(odd_power_coefficient(2), rat(-16, 15));
    assert_eq!(odd_power_coefficient(3), rat(32, 35));
}

// ---- Numeric checks ----

#[test]
fn funcrel_on_both_branches() {
    for m in 0..=4 {
        for phi in [z("1"), z("0.5"), two_pi(), z("2,1"), z("-3"), z("-0.5,2")] {
            let r = check_funcrel_S(m, &phi, PREC).unwrap();
            assert_eq!(r.relation_id, RelationId::FuncrelS);
            assert!(r.pass(), "m={m} phi={phi}: {}", r.summary_line());
            assert!(r.residual_log2() < threshold_log2(PREC));
        }
    }
}

#[test]
fn funcrel_is_even_in_phi() {
    for m in 0..=3 {
        let a = check_funcrel_S(m, &z("1.7,0.4"), PREC).unwrap();
        let b = check_funcrel_S(m, &z("-1.7,-0.4"), PREC).unwrap();
        assert!(a.pass() && b.pass(), "m={m}");
    }
}

#[test]
fn modular_image_is_an_involution() {
    let phi = z("2,1");
    let back = modular_image(&modular_image(&phi, PREC), PREC);
    assert!((&back - &phi).log2_abs() < -(PREC as f64) + 8.0);
}

#[test]
fn lambert_relations() {
    for m in 0..=4 {
        for phi in [z("1"), two_pi(), z("9"), z("2,1")] {
            let r = check_lambert_pos(m, &phi, PREC).unwrap();
            assert!(r.pass(), "{}", r.summary_line());
        }
    }
    for m in 1..=4 {
        for phi in [z("1"), two_pi(), z("3,2")] {
            let r = check_lambert_neg(m, &phi, PREC).unwrap();
            assert!(r.pass(), "{}", r.summary_line());
        }
    }
    assert!(matches!(check_lambert_neg(0, &z("1"), PREC), Err(Error::Param(_))));
}

#[test]
fn linearity_and_exp_forms() {
    for m in 0..=4 {
        for phi in [z("1"), z("-1"), z("0.3,4"), z("2,1")] {
            assert!(check_linearity(m, &phi, PREC).unwrap().pass());
            assert!(check_sinh_linearity(m, &phi, PREC).unwrap().pass());
        }
        for phi in [z("1"), z("2,1")] {
            for r in check_exp_representation(m, &phi, PREC).unwrap() {
                assert!(r.pass(), "{}", r.summary_line());
            }
        }
    }
}

#[test]
fn reductions_cover_all_parities() {
    for m in 1..=4 {
        for g in 1..=m {
            let r = check_reduction(m, g, ReductionKind::Cosh, &z("2"), PREC).unwrap();
            assert!(r.pass(), "{}", r.summary_line());
            let kind = if g % 2 == 0 { ReductionKind::SinhEven } else { ReductionKind::SinhOdd };
            let r = check_reduction(m, g, kind, &z("1.5"), PREC).unwrap();
            assert!(r.pass(), "{}", r.summary_line());
        }
    }
    assert!(check_reduction(2, 1, ReductionKind::SinhEven, &z("1"), PREC).is_err());
    assert!(check_reduction(1, 2, ReductionKind::Cosh, &z("1"), PREC).is_err());
}

#[test]
fn imaginary_axis_is_rejected() {
    let err = check_funcrel_S(1, &z("0,1"), PREC).unwrap_err();
    assert!(matches!(err, Error::Domain(_)), "{err:?}");
}

#[test]
fn asymptotic_checks() {
    let reps = check_asymptotic_S(1, 256).unwrap();
    assert_eq!(reps.len(), 4);
    assert!(reps.iter().all(|r| r.status != Status::Fail));
    assert!(reps[3].residual_log2() < -200.0);

    let reps = check_asymptotic_sinh(1, 1, PREC).unwrap();
    for r in &reps[1..] {
        let s = r.slope.unwrap();
        assert!((s - 7.0).abs() <= 0.3, "slope {s}");
    }
}

#[test]
fn report_json_shape() {
    let r = check_funcrel_S(1, &z("2,1"), PREC).unwrap();
    let v = r.to_json();
    for key in ["relation_id", "m", "phi", "prec", "lhs", "rhs", "residual", "status"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["relation_id"], "funcrel-S");
    assert_eq!(v["status"], "PASS");
}

//! Zeros of the residue polynomials.

use hypseries::zeros::{find_zeros, psi_polynomial, to_csv, verify_unruh_zero, zeros_dataset, CSV_HEADER};

#[test]
fn unruh_zero_is_exact() {
    for m in 0..=40 {
        assert!(verify_unruh_zero(m), "m={m}");
    }
}

#[test]
fn psi_polynomial_has_full_degree() {
    for m in 0..=10 {
        let p = psi_polynomial(m);
        assert_eq!(p.degree(), Some(2 * m + 2), "m={m}");
    }
}

#[test]
fn order_zero_zeros_are_plus_minus_two_pi_i() {
    let set = find_zeros(0, 128).unwrap();
    assert_eq!(set.degree(), 2);
    let two_pi = 2.0 * std::f64::consts::PI;
    assert!((set.zeros[0].im_f64() - two_pi).abs() < 1e-30);
    assert!((set.zeros[1].im_f64() + two_pi).abs() < 1e-30);
    assert!(set.zeros.iter().all(|z| z.re_f64() == 0.0));
}

#[test]
fn order_one_has_a_real_pair() {
    let set = find_zeros(1, 192).unwrap();
    assert!(set.contains_unruh());
    let real: Vec<f64> = set.zeros.iter().filter(|z| z.im_f64() == 0.0).map(|z| z.re_f64()).collect();
    assert_eq!(real.len(), 2);
    assert!(real[0] < 0.0 && (real[0] + real[1]).abs() < 1e-30);
}

#[test]
fn small_orders_pass_every_check() {
    for m in 0..=12 {
        let set = find_zeros(m, 256).unwrap();
        assert_eq!(set.zeros.len(), 2 * m + 2);
        assert!(set.max_residual_log2() < -128.0, "m={m}");
        assert!(set.contains_unruh(), "m={m}");
        let c = set.checks();
        assert!(c.pass(256), "m={m}: {c:?}");
        assert!(set.min_unit_circle_distance() > 1e-6);
    }
}

#[test]
fn zeros_are_sorted_and_deterministic() {
    let a = find_zeros(5, 192).unwrap();
    let b = find_zeros(5, 192).unwrap();
    assert_eq!(to_csv(std::slice::from_ref(&a)), to_csv(&[b]));
    for w in a.zeros.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        assert!(x.im_f64() > y.im_f64() || (x.im_f64() == y.im_f64() && x.re_f64() <= y.re_f64()));
    }
}

#[test]
fn dataset_rows() {
    let sets = zeros_dataset(6, 128).unwrap();
    let csv = to_csv(&sets);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let expected: usize = (0..=6).map(|m| 2 * m + 2).sum();
    assert_eq!(lines.count(), expected);
}

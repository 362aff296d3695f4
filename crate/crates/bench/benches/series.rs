use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hypseries::identities::identity_suite;
use hypseries::polynomials::{calB, calS};
use hypseries::relations::check_funcrel_S;
use hypseries::series::eval_S;
use hypseries::zeros::find_zeros;
use hypseries_bench::{phi, PHIS};

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("eval_S");
    for prec in [128usize, 512] {
        for p in PHIS {
            let z = phi(p, prec);
            g.bench_with_input(BenchmarkId::new(format!("m2_p{prec}"), p), &z, |b, z| {
                b.iter(|| eval_S(2, black_box(z), prec).unwrap())
            });
        }
    }
    g.finish();
}

fn exact(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact");
    for m in [4usize, 12, 25] {
        g.bench_with_input(BenchmarkId::new("calB", m), &m, |b, &m| b.iter(|| calB(black_box(m))));
    }
    g.bench_function("calS_6", |b| b.iter(|| calS(black_box(6))));
    g.sample_size(10);
    g.bench_function("identity_suite_8", |b| b.iter(|| identity_suite(black_box(8)).unwrap()));
    g.finish();
}

fn relations(c: &mut Criterion) {
    let z = phi("2,1", 128);
    c.bench_function("funcrel_S_m3", |b| b.iter(|| check_funcrel_S(3, black_box(&z), 128).unwrap()));
}

fn zeros(c: &mut Criterion) {
    let mut g = c.benchmark_group("find_zeros");
    g.sample_size(10);
    for m in [5usize, 20] {
        g.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| b.iter(|| find_zeros(m, 256).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, series, exact, relations, zeros);
criterion_main!(benches);

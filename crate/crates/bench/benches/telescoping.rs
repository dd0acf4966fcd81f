use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mixedct::arith::{QPoly, QRat, XPoly};
use mixedct::inversion::{bench_family, invert_recurrence};
use mixedct::reduction::HermiteContext;
use mixedct::telescoping::{mixed_ct, verify_telescoper, MixedCtOptions};
use mixedct_bench::{example2, jacobi};

fn telescopers(c: &mut Criterion) {
    let t = jacobi();
    c.bench_function("jacobi/mixed_ct", |b| b.iter(|| mixed_ct(black_box(&t), MixedCtOptions::default()).unwrap()));
    let out = mixed_ct(&t, MixedCtOptions::default()).unwrap();
    let cert = out.certificate.unwrap();
    c.bench_function("jacobi/verify", |b| b.iter(|| verify_telescoper(&t, &out.telescoper, &cert)));

    let mut g = c.benchmark_group("example2");
    g.sample_size(10);
    let t2 = example2();
    let opts = MixedCtOptions { certificate: false, ..Default::default() };
    g.bench_function("mixed_ct_no_certificate", |b| b.iter(|| mixed_ct(black_box(&t2), opts).unwrap()));
    g.finish();
}

fn hermite(c: &mut Criterion) {
    let t = example2();
    let ctx = HermiteContext::new(t.h(), t.st()).unwrap();
    let p = t.p().mul(&XPoly::x().pow(8));
    c.bench_function("hermite/example2_degree9", |b| b.iter(|| ctx.reduce(black_box(&p)).unwrap()));
}

fn inversion(c: &mut Criterion) {
    let catalan = QRat::from_poly(QPoly::from_ints(&[0, 1, -1]));
    c.bench_function("inversion/catalan", |b| b.iter(|| invert_recurrence(black_box(&catalan)).unwrap()));
    let mut g = c.benchmark_group("table_rows");
    g.sample_size(10);
    for k in [2usize, 3] {
        g.bench_function(format!("k{k}"), |b| b.iter(|| bench_family(k, k, 1, 100).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, telescopers, hermite, inversion);
criterion_main!(benches);

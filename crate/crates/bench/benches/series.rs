use criterion::{black_box, criterion_group, criterion_main, Criterion};
use cylq_core::asw::{eval_s, SumSpec};
use cylq_core::cylindric::{solve_h_recursion, Profile};
use cylq_core::qfunctions::{borodin_product, q_poch_inf};
use cylq_core::suite::STORED_CERTIFICATES;
use cylq_core::symbolic::{residual_for, search_certificate, SearchBounds};

fn series(c: &mut Criterion) {
    let p = q_poch_inf(1, 1, 200);
    c.bench_function("invert (q)_inf to order 200", |b| b.iter(|| black_box(&p).invert().unwrap()));
    let inv = p.invert().unwrap();
    c.bench_function("multiply order 200", |b| b.iter(|| black_box(&p) * black_box(&inv)));
    c.bench_function("borodin product (3,2,2) to order 60", |b| {
        b.iter(|| borodin_product(black_box([3, 2, 2]), 60).unwrap())
    });
}

fn sums(c: &mut Criterion) {
    let spec = SumSpec::from_flat(10, &[0, 1, 0, 1]).unwrap();
    c.bench_function("S_10(0,1|0,1) to order 40", |b| b.iter(|| eval_s(black_box(&spec), 40).unwrap()));
    c.bench_function("recursion at level 7 to order 40", |b| b.iter(|| solve_h_recursion(black_box(7), 40).unwrap()));
}

fn symbolic(c: &mut Criterion) {
    let stored = STORED_CERTIFICATES.iter().find(|s| s.modulus == 8 && s.profile == [2, 2, 1]).unwrap();
    let cert = stored.certificate().unwrap();
    let target = residual_for(stored.profile()).unwrap();
    c.bench_function("check 37-entry certificate", |b| b.iter(|| cert.check(black_box(&target)).unwrap()));
    let t7 = residual_for(Profile::new([2, 1, 1])).unwrap();
    let bounds = SearchBounds::default();
    c.bench_function("search mod 7 (2,1,1)", |b| b.iter(|| search_certificate(black_box(&t7), 7, &bounds).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = series, sums, symbolic
}
criterion_main!(benches);

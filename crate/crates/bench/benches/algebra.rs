use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use liesheaf::filtration::{graded_limit, mu_bracket, mu_tensor, random_flag, GradedSplitting};
use liesheaf::parabolic::{random_algebra_flag, roundtrip_check};
use liesheaf::stability::{example2_model, example2_table, grad};
use liesheaf::sl;

fn lie(c: &mut Criterion) {
    // construction includes the Killing matrix
    c.bench_function("sl3 with Killing form", |b| b.iter(|| sl(black_box(3)).unwrap()));
    c.bench_function("sl4 with Killing form", |b| b.iter(|| sl(black_box(4)).unwrap()));
}

fn flags(c: &mut Criterion) {
    let g = sl(3).unwrap();
    let f = random_flag(&g, 7);
    let alg = random_algebra_flag(&g, 7).unwrap();
    c.bench_function("mu_bracket sl3", |b| b.iter(|| mu_bracket(&g, black_box(&f)).unwrap()));
    c.bench_function("mu_tensor sl3", |b| b.iter(|| mu_tensor(&g, black_box(&f)).unwrap()));
    c.bench_function("graded_limit sl3", |b| {
        b.iter(|| graded_limit(&g, black_box(&alg), &GradedSplitting::echelon(&alg)).unwrap())
    });
    c.bench_function("parabolic round trip sl3", |b| b.iter(|| roundtrip_check(&g, black_box(&alg)).unwrap()));
}

fn sheaves(c: &mut Criterion) {
    c.bench_function("stability table", |b| b.iter(|| example2_table().unwrap()));
    let m = example2_model(3, -5).unwrap();
    c.bench_function("grad c=3", |b| b.iter(|| grad(black_box(&m)).unwrap()));
}

criterion_group!(benches, lie, flags, sheaves);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pcm_core::fixtures;
use pcm_core::frontend::parse_spec;
use pcm_core::geometry::GeometryPack;
use pcm_core::identities::run_identities;
use pcm_core::oracle::float_crosscheck;

fn geometry(c: &mut Criterion) {
    let concrete = fixtures::f1_minus2();
    let symbolic = fixtures::f2_symbolic();
    c.bench_function("pack/f1_minus2", |b| {
        b.iter(|| GeometryPack::compute(black_box(&concrete)))
    });
    c.bench_function("pack/f2_symbolic", |b| {
        b.iter(|| GeometryPack::compute(black_box(&symbolic)))
    });
}

fn identities(c: &mut Criterion) {
    let star = GeometryPack::compute(&fixtures::f2_star());
    let family = GeometryPack::compute(&fixtures::f1_symbolic());
    c.bench_function("identities/f2_star", |b| b.iter(|| run_identities(black_box(&star))));
    let mut g = c.benchmark_group("identities_symbolic");
    g.sample_size(10);
    g.bench_function("f1_symbolic", |b| b.iter(|| run_identities(black_box(&family))));
    g.finish();
}

fn frontend_and_oracle(c: &mut Criterion) {
    c.bench_function("parse/f1_source", |b| {
        b.iter(|| parse_spec(black_box(fixtures::F1_SOURCE)).unwrap())
    });
    let star = fixtures::f2_star();
    c.bench_function("float_crosscheck/f2_star", |b| {
        b.iter(|| float_crosscheck(black_box(&star)).unwrap())
    });
}

criterion_group!(benches, geometry, identities, frontend_and_oracle);
criterion_main!(benches);

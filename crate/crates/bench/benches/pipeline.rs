use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use legdga::charalg::{complete_bounded, derive_zero_generators, search_unit_witness};
use legdga::dga::{appendix_m10_139, check_d_squared, compute_differential, BasepointPolicy};
use legdga::{Laurent, Z2};
use legdga_bench::{fronts, z2_tables};

fn differentials(c: &mut Criterion) {
    let mut group = c.benchmark_group("differential");
    for (name, front) in fronts() {
        group.bench_function(format!("{name}/z2"), |b| {
            b.iter(|| compute_differential::<Z2>(black_box(&front), BasepointPolicy::default()).unwrap())
        });
        group.bench_function(format!("{name}/laurent"), |b| {
            b.iter(|| compute_differential::<Laurent>(black_box(&front), BasepointPolicy::default()).unwrap())
        });
    }
    let table = appendix_m10_139();
    group.bench_function("m10_139/d_squared", |b| b.iter(|| check_d_squared(black_box(&table)).unwrap()));
    group.finish();
}

fn completion(c: &mut Criterion) {
    let mut group = c.benchmark_group("completion");
    group.sample_size(10);
    for (name, dga) in z2_tables() {
        group
            .bench_function(format!("{name}/cap8"), |b| b.iter(|| complete_bounded(black_box(dga.differentials()), 8)));
        group.bench_function(format!("{name}/zeros"), |b| b.iter(|| derive_zero_generators(black_box(&dga))));
    }
    group.finish();
}

fn witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness");
    group.sample_size(10);
    for (name, dga) in z2_tables() {
        group.bench_function(format!("{name}/search_cap12"), |b| {
            b.iter(|| search_unit_witness(black_box(&dga), 12).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, differentials, completion, witness);
criterion_main!(benches);

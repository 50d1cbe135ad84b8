//! Serial against parallel execution on the data-parallel hot paths.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use spexlab::constructors::{enumerate_family_bounded, FamilyKind, FamilySpec};
use spexlab::detect::{contains_odd_wheel_with, DEFAULT_BUDGET};
use spexlab::generate::{all_graphs, graphs_in_window, DegreeWindow};
use spexlab::verify::{brute_spex, VerifyOptions};
use spexlab::walks::ex_infinity;
use spexlab::Exec;

const MODES: [(&str, Exec); 2] = [("serial", Exec::Serial), ("parallel", Exec::Parallel)];

fn generation(c: &mut Criterion) {
    // Uncached: the component cache would otherwise hide the work.
    let window = DegreeWindow { order: 10, min_degree: 3, max_degree: 4 };
    let mut group = c.benchmark_group("generate_degree_window_10");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| graphs_in_window(black_box(window), exec)));
    }
    group.finish();
}

fn ex_infinity_g5_19(c: &mut Criterion) {
    let spec = FamilySpec::new(FamilyKind::GFam, 5, 19).unwrap();
    let family = enumerate_family_bounded(&spec, 100_000, Exec::default()).unwrap();
    let mut group = c.benchmark_group("ex_infinity_g5_19");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| ex_infinity(black_box(&family), None, exec)));
    }
    group.finish();
}

fn odd_wheel_scan(c: &mut Criterion) {
    // Dense graphs make every hub search non-trivial.
    let graphs: Vec<_> = all_graphs(8, Exec::default()).into_iter().filter(|g| g.size() >= 20).collect();
    let mut group = c.benchmark_group("odd_wheel_k3_dense_order_8");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                graphs
                    .iter()
                    .filter(|g| contains_odd_wheel_with(g, 3, DEFAULT_BUDGET, exec).unwrap())
                    .count()
            })
        });
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_spex_7_2");
    group.sample_size(10);
    for (name, exec) in MODES {
        let opts = VerifyOptions { exec, ..VerifyOptions::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| brute_spex(7, 2, &opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, generation, ex_infinity_g5_19, odd_wheel_scan, brute_force);
criterion_main!(benches);

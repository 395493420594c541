//! Benchmarks for the heavy pipeline stages, comparing the data-parallel
//! path against single-threaded execution.
//!
//! With the default `parallel` feature each operation runs once on a
//! one-thread pool and once on the default pool; built with
//! `--no-default-features` the suite measures the sequential fallback
//! directly.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linecomp_core::arrangement::{builtin_arrangement, compute_lattice, Arrangement, Lattice};
use linecomp_core::autgroup::{component_orbits, linear_aut_group};
use linecomp_core::fibration::{all_nets, census, net_search};

#[cfg(feature = "parallel")]
struct Config {
    label: &'static str,
    pool: rayon::ThreadPool,
}

#[cfg(feature = "parallel")]
fn configs() -> Vec<Config> {
    let pool = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool builds")
    };
    vec![
        Config {
            label: "one-thread",
            pool: pool(1),
        },
        Config {
            label: "all-threads",
            pool: pool(0),
        },
    ]
}

#[cfg(feature = "parallel")]
fn run<R: Send>(config: &Config, f: impl FnOnce() -> R + Send) -> R {
    config.pool.install(f)
}

#[cfg(not(feature = "parallel"))]
struct Config {
    label: &'static str,
}

#[cfg(not(feature = "parallel"))]
fn configs() -> Vec<Config> {
    vec![Config {
        label: "sequential",
    }]
}

#[cfg(not(feature = "parallel"))]
fn run<R>(_config: &Config, f: impl FnOnce() -> R) -> R {
    f()
}

fn arrangement(name: &str) -> (Arrangement, Lattice) {
    let arr = builtin_arrangement(name).expect("builtin loads");
    let lattice = compute_lattice(&arr);
    (arr, lattice)
}

fn bench_lattice(c: &mut Criterion) {
    let arr = builtin_arrangement("hesse12").expect("builtin loads");
    let mut group = c.benchmark_group("lattice-hesse12");
    for config in configs() {
        group.bench_function(BenchmarkId::from_parameter(config.label), |b| {
            b.iter(|| run(&config, || compute_lattice(&arr)));
        });
    }
    group.finish();
}

fn bench_net_search(c: &mut Criterion) {
    let (arr, lattice) = arrangement("dualhesse9");
    let mut group = c.benchmark_group("nets-dualhesse9");
    for config in configs() {
        group.bench_function(BenchmarkId::from_parameter(config.label), |b| {
            b.iter(|| run(&config, || net_search(&arr, &lattice, 3)));
        });
    }
    group.finish();
}

fn bench_aut_group(c: &mut Criterion) {
    let (arr, lattice) = arrangement("ceva6");
    let mut group = c.benchmark_group("aut-ceva6");
    group.sample_size(10);
    for config in configs() {
        group.bench_function(BenchmarkId::from_parameter(config.label), |b| {
            b.iter(|| run(&config, || linear_aut_group(&arr, &lattice)));
        });
    }
    group.finish();
}

fn bench_orbit_classes(c: &mut Criterion) {
    let (arr, lattice) = arrangement("ceva6");
    let nets = all_nets(&arr, &lattice);
    let cens = census(&arr, &lattice, &nets);
    let aut = linear_aut_group(&arr, &lattice).expect("group search succeeds");
    let mut group = c.benchmark_group("orbit-classes-ceva6");
    group.sample_size(20);
    for config in configs() {
        group.bench_function(BenchmarkId::from_parameter(config.label), |b| {
            b.iter(|| {
                run(&config, || {
                    component_orbits(&arr, &lattice, &nets, &cens, &aut)
                })
            });
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_lattice,
    bench_net_search,
    bench_aut_group,
    bench_orbit_classes
);
criterion_main!(benches);

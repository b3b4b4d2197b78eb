use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use semideal_core::enumerate::canonical_form;
use semideal_core::idealprops::profiles;
use semideal_core::{
    enumerate_ideals, enumerate_semigroups, run_suite, Dedup, EnumerationConfig, IdealKind,
    Semigroup, TheoremId,
};

fn labeled(n: usize) -> Vec<Semigroup> {
    enumerate_semigroups(EnumerationConfig::labeled(n))
        .unwrap()
        .collect()
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate labeled order 4", |b| {
        b.iter(|| {
            enumerate_semigroups(EnumerationConfig::labeled(black_box(4)))
                .unwrap()
                .count()
        })
    });
    c.bench_function("enumerate up to iso order 4", |b| {
        b.iter(|| {
            enumerate_semigroups(EnumerationConfig::up_to_iso(black_box(4)))
                .unwrap()
                .count()
        })
    });
}

fn analysis(c: &mut Criterion) {
    let order4 = labeled(4);
    c.bench_function("canonical form, all of order 4", |b| {
        b.iter(|| order4.iter().map(canonical_form).count())
    });
    c.bench_function("interior ideals and profiles, all of order 4", |b| {
        b.iter(|| {
            order4
                .iter()
                .map(|s| enumerate_ideals(s, IdealKind::Interior).len() + profiles(s).len())
                .sum::<usize>()
        })
    });
}

fn theorem_sweep(c: &mut Criterion) {
    let order3 = labeled(3);
    c.bench_function("verify all theorems, order 3", |b| {
        b.iter(|| run_suite(black_box(&order3), TheoremId::ALL, Dedup::Labeled).total_fails())
    });
}

criterion_group!(benches, enumeration, analysis, theorem_sweep);
criterion_main!(benches);

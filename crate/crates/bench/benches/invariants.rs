use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use extdim_bench::{sample_modules, spider_algebra};
use extdim_core::decompose::{decompose, DEFAULT_SEED};
use extdim_core::homology::{default_cutoff, simple_dimensions};
use extdim_core::torsion::{best_bound, thm319_certificate, SimpleSubset, SubsetStrategy};
use extdim_core::Representation;

fn pd_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("pd_table");
    for n in [5, 7] {
        let alg = spider_algebra(n);
        g.bench_function(format!("spider{n}"), |b| b.iter(|| simple_dimensions(black_box(&alg), default_cutoff(&alg))));
    }
    g.finish();
}

fn subset_search(c: &mut Criterion) {
    let alg = spider_algebra(5);
    let cutoff = default_cutoff(&alg);
    c.bench_function("exhaustive_subsets/spider5", |b| {
        b.iter(|| best_bound(black_box(&alg), &SubsetStrategy::Exhaustive, cutoff).unwrap())
    });
}

fn certificate(c: &mut Criterion) {
    let alg = spider_algebra(5);
    let pd = simple_dimensions(&alg, default_cutoff(&alg));
    let s = SimpleSubset::validated(&alg, &[1, 2, 3, 4], &pd).unwrap();
    let s1 = Representation::simple(&alg, 0).unwrap();
    c.bench_function("thm319_certificate/spider5_S1", |b| b.iter(|| thm319_certificate(&s, black_box(&s1)).unwrap()));
}

fn decomposition(c: &mut Criterion) {
    let alg = spider_algebra(5);
    let mods = sample_modules(&alg, 8, 12, 11);
    c.bench_function("decompose/spider5_random", |b| {
        b.iter(|| {
            for m in &mods {
                black_box(decompose(m, DEFAULT_SEED).unwrap());
            }
        })
    });
}

criterion_group!(benches, pd_table, subset_search, certificate, decomposition);
criterion_main!(benches);

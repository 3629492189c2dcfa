use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use eulerian_gamma::bijections::phi;
use eulerian_gamma::engine::{basic_eulerian, basic_eulerian_desrix, run_check_at, tally_over};
use eulerian_gamma::perm::{enumerate, exc, fix, maj};
use eulerian_gamma::qpoly::{gamma_extract, q_binomial, Monomial};
use eulerian_gamma::rixfact::rix_factorize;
use eulerian_gamma::Var;

fn families(c: &mut Criterion) {
    let mut group = c.benchmark_group("families");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_with_input(BenchmarkId::new("exc_fix_maj", n), &n, |b, &n| {
            b.iter(|| {
                tally_over(n, |p| {
                    Some(Monomial::ONE.with(Var::T, exc(p)).with(Var::R, fix(p)).with(Var::Q, maj(p) - exc(p)))
                })
                .unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("des_rix_ai", n), &n, |b, &n| {
            b.iter(|| basic_eulerian_desrix(n).unwrap())
        });
    }
    group.finish();
}

fn algebra(c: &mut Criterion) {
    let a9 = basic_eulerian(9).unwrap().substitute(Var::R, 1);
    c.bench_function("gamma_extract A9", |b| b.iter(|| gamma_extract(black_box(&a9), 8).unwrap()));
    c.bench_function("q_binomial 20 10", |b| b.iter(|| q_binomial(black_box(20), 10).unwrap()));
}

fn bijections(c: &mut Criterion) {
    let all: Vec<_> = enumerate(7).unwrap().collect();
    c.bench_function("rix_factorize S7", |b| {
        b.iter(|| all.iter().map(|p| rix_factorize(p).unwrap().rix_set.len()).sum::<usize>())
    });
    c.bench_function("phi S7", |b| b.iter(|| all.iter().map(|p| phi(p).len()).sum::<usize>()));
}

fn checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("checks");
    group.sample_size(10);
    for id in ["lemma-2.1", "prop-3.5", "lemma-4.2"] {
        group.bench_function(id, |b| b.iter(|| assert!(run_check_at(id, 7).unwrap().passed)));
    }
    group.finish();
}

criterion_group!(benches, families, algebra, bijections, checks);
criterion_main!(benches);

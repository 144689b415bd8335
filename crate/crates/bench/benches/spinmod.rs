use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spinmod_core::category::sl2_category;
use spinmod_core::corpus::{e8, lens_chain, random_forest, rng};
use spinmod_core::cyclo::{make_root, CycloNumber};
use spinmod_core::invariants::{wrt_spin, Evaluator};
use spinmod_core::structures::{diagonalize_mod, homology_classes};
use spinmod_core::surgery::linking_matrix;

fn dense(n: u32, seed: i64) -> CycloNumber {
    let mut x = CycloNumber::zero(make_root(n, 1).field());
    for k in 0..n as i64 {
        x += &make_root(n, k).scale((k * seed) % 7 - 3);
    }
    x
}

fn cyclo(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclo");
    for n in [12u32, 32, 60] {
        let (a, b) = (dense(n, 3), dense(n, 5));
        group.bench_with_input(BenchmarkId::new("mul", n), &n, |bench, _| bench.iter(|| black_box(&a) * black_box(&b)));
        group.bench_with_input(BenchmarkId::new("invert", n), &n, |bench, _| bench.iter(|| black_box(&a).invert()));
    }
    group.finish();
}

fn evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval");
    for r in [5u32, 8, 12] {
        let ev = Evaluator::new(&sl2_category(r).unwrap()).unwrap();
        let f = e8();
        group.bench_with_input(BenchmarkId::new("wrt_e8", r), &r, |b, _| b.iter(|| ev.wrt(black_box(&f)).unwrap()));
    }
    let ev = Evaluator::new(&sl2_category(8).unwrap()).unwrap();
    let f = lens_chain(13, 5);
    group.bench_function("spin_table_lens_13_5", |b| b.iter(|| wrt_spin(&ev, black_box(&f), 2).unwrap()));
    group.finish();
}

fn structures(c: &mut Criterion) {
    let mut group = c.benchmark_group("structures");
    let mut r = rng(9);
    let mats: Vec<_> = (0..16).map(|_| linking_matrix(&random_forest(&mut r, 8, 5))).collect();
    group.bench_function("diagonalize_mod_12", |b| {
        b.iter(|| {
            for l in &mats {
                black_box(diagonalize_mod(l.rows(), 12));
            }
        })
    });
    group.bench_function("homology_classes_6", |b| {
        b.iter(|| {
            for l in &mats {
                black_box(homology_classes(l, 6).unwrap());
            }
        })
    });
    group.finish();
}

criterion_group!(benches, cyclo, evaluation, structures);
criterion_main!(benches);

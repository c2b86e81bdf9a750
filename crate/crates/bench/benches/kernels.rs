//! Criterion benchmarks for the hot kernels: Smith normal form, exhaustive
//! cocycle checking, pair enumeration and the quasi-Hopf axiom suite.

use criterion::{criterion_group, criterion_main, Criterion};

use biprod2_core::classify::enumerate_pairs;
use biprod2_core::cocycles::{check_cocycle, omega_abelian_cochain, CocycleDatum, CocycleKind};
use biprod2_core::groups::AbelianGroupSpec;
use biprod2_core::qha::{check_axioms, h4, kgw};
use biprod2_core::zlattice::{smith_normal_form, IntMat};

fn bench_snf(c: &mut Criterion) {
    let a = IntMat::from_rows(&[
        vec![0, 0, 2, 7, -3, 1],
        vec![0, -2, 0, 4, 9, -6],
        vec![2, 0, 0, -5, 2, 8],
        vec![4, 1, -7, 0, 0, 3],
        vec![6, -4, 2, 1, 5, 0],
        vec![-3, 8, 0, 2, -1, 4],
    ])
    .unwrap();
    c.bench_function("snf_6x6", |b| b.iter(|| smith_normal_form(std::hint::black_box(&a))));
}

fn bench_cocycle_check(c: &mut Criterion) {
    let g = AbelianGroupSpec::new(vec![2, 6]).unwrap();
    let d = CocycleDatum::parse("c=1,3;c12=1", 2).unwrap();
    let table = omega_abelian_cochain(&g, &d);
    c.bench_function("three_cocycle_c2c6", |b| {
        b.iter(|| check_cocycle(&g, std::hint::black_box(&table), CocycleKind::ThreeCocycle, 64))
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let g = AbelianGroupSpec::new(vec![2, 6]).unwrap();
    let d = CocycleDatum::parse("c=1,3;c12=1", 2).unwrap();
    c.bench_function("enumerate_pairs_c2c6", |b| {
        b.iter(|| enumerate_pairs(std::hint::black_box(&g), &d, 64))
    });
}

fn bench_axioms(c: &mut Criterion) {
    let q4 = h4();
    c.bench_function("axioms_h4", |b| b.iter(|| check_axioms(std::hint::black_box(&q4), 64)));
    let klein = AbelianGroupSpec::new(vec![2, 2]).unwrap();
    let d = CocycleDatum::parse("c=0,1;c12=1", 2).unwrap();
    let qk = kgw(&klein, &d).unwrap();
    c.bench_function("axioms_kgw_klein", |b| {
        b.iter(|| check_axioms(std::hint::black_box(&qk), 64))
    });
}

criterion_group!(benches, bench_snf, bench_cocycle_check, bench_enumerate, bench_axioms);
criterion_main!(benches);

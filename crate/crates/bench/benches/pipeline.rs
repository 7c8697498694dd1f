use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use loopbraid::chains::{chain_matrix_of_word, ChainLevel};
use loopbraid::{burau, lefschetz_report, periodic_bound, rep_of_word, RepKind};
use loopbraid_bench::{coil_word, mixed_word};

fn bench_rep_fold(c: &mut Criterion) {
    let word = mixed_word(4, 12);
    c.bench_function("rep_of_word n=4 len=12", |b| {
        b.iter(|| rep_of_word(RepKind::R, black_box(&word)))
    });
    let coil = coil_word(5, 4);
    c.bench_function("rep_of_word coil n=5 len=16", |b| {
        b.iter(|| rep_of_word(RepKind::Rbar, black_box(&coil)))
    });
}

fn bench_chain_fold(c: &mut Criterion) {
    let word = mixed_word(4, 10);
    c.bench_function("chain_matrix_of_word n=4 len=10", |b| {
        b.iter(|| chain_matrix_of_word(ChainLevel::One, black_box(&word)))
    });
}

fn bench_burau(c: &mut Criterion) {
    let coil = coil_word(6, 8);
    c.bench_function("burau coil n=6 len=40", |b| {
        b.iter(|| burau(black_box(&coil)))
    });
}

fn bench_report(c: &mut Criterion) {
    let word = mixed_word(4, 8);
    c.bench_function("lefschetz_report n=4 len=8", |b| {
        b.iter(|| lefschetz_report(black_box(&word)).expect("oracle agrees"))
    });
    c.bench_function("periodic_bound p=3 n=4 len=8", |b| {
        b.iter(|| periodic_bound(black_box(&word), 3))
    });
}

criterion_group!(
    benches,
    bench_rep_fold,
    bench_chain_fold,
    bench_burau,
    bench_report
);
criterion_main!(benches);

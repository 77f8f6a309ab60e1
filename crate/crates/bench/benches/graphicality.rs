use criterion::{black_box, criterion_group, criterion_main, Criterion};
use degseq_bench::{c_over_n_sorted, geometric_sorted};
use degseq_core::{eg_margin, is_graphical_sorted};

fn bench_decision(c: &mut Criterion) {
    let mut group = c.benchmark_group("eg_decision");
    for &n in &[10_000usize, 1_000_000] {
        let geo = geometric_sorted(n, 7);
        group.bench_function(format!("geometric/n={n}"), |b| {
            b.iter(|| is_graphical_sorted(black_box(&geo)))
        });
        let con = c_over_n_sorted(n, 7);
        group.bench_function(format!("c_over_n/n={n}"), |b| {
            b.iter(|| is_graphical_sorted(black_box(&con)))
        });
    }
    group.finish();
}

fn bench_margin(c: &mut Criterion) {
    let mut group = c.benchmark_group("eg_margin");
    group.sample_size(20);
    for &n in &[10_000usize, 1_000_000] {
        let geo = geometric_sorted(n, 11);
        group.bench_function(format!("geometric/n={n}"), |b| {
            b.iter(|| eg_margin(black_box(&geo)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_decision, bench_margin);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use pfaffian::characters::verify_limitpfaff;
use pfaffian::verify::verify_all;
use pfaffian::weights::verify_pushforward;
use pfaffian::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn pushforward(c: &mut Criterion) {
    let mut group = c.benchmark_group("pushforward");
    for m in [3usize, 4] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, m), &m, |b, &m| {
                b.iter(|| {
                    for p in 0..=m {
                        black_box(verify_pushforward(m, p, 2 * m as i64 + 6, exec).unwrap());
                    }
                })
            });
        }
    }
    group.finish();
}

fn limitpfaff(c: &mut Criterion) {
    let mut group = c.benchmark_group("limitpfaff");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                for k in 0..3 {
                    black_box(verify_limitpfaff(3, k, 8, exec).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn full_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(verify_all(13, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, pushforward, limitpfaff, full_sweep);
criterion_main!(benches);

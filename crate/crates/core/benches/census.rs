use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncross::{census, classify, enumerate_schemes, CensusOptions, Dimension};

fn bench_enumeration(c: &mut Criterion) {
    let dim = Dimension::new(7).unwrap();
    c.bench_function("enumerate n=7", |b| {
        b.iter(|| black_box(enumerate_schemes(dim).unwrap().count()))
    });
}

fn bench_classify(c: &mut Criterion) {
    let dim = Dimension::new(7).unwrap();
    let scheme = enumerate_schemes(dim).unwrap().next().unwrap();
    c.bench_function("classify one n=7 scheme", |b| {
        b.iter(|| black_box(classify(black_box(&scheme), 0, 0)))
    });
}

fn bench_census(c: &mut Criterion) {
    let dim = Dimension::new(7).unwrap();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut jobs = vec![1];
    if cfg!(feature = "parallel") {
        jobs.push(threads.max(2));
    }
    let mut group = c.benchmark_group("census n=7");
    group.sample_size(10);
    for j in jobs {
        let label = if j == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::new(label, j), &j, |b, &j| {
            let opts = CensusOptions {
                jobs: j,
                ..CensusOptions::default()
            };
            b.iter(|| black_box(census(dim, &opts).unwrap().count()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_classify, bench_census);
criterion_main!(benches);

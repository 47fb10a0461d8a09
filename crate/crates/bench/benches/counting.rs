use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gridpart::{counts, fixed_count_recurrence, GridShape, InvolutionProfile, Oracle};
use gridpart_bench::SHAPES;

fn formulas(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_report");
    for &(m, n) in SHAPES.iter().chain(&[(5, 6), (4, 7)]) {
        let shape = GridShape::new(m, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(shape), &shape, |b, &s| {
            b.iter(|| counts::count_report(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn involution_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("fixed_partition_count");
    for (t, u) in [(4, 4), (7, 1), (12, 6)] {
        let p = InvolutionProfile::new(t, u);
        group.bench_with_input(
            BenchmarkId::new("series", format!("{t},{u}")),
            &p,
            |b, &p| b.iter(|| gridpart::fixed_partition_count(black_box(p)).unwrap()),
        );
        group.bench_with_input(
            BenchmarkId::new("recurrence", format!("{t},{u}")),
            &p,
            |b, &p| b.iter(|| fixed_count_recurrence(black_box(p))),
        );
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_survey");
    group.sample_size(10);
    for &(m, n) in SHAPES {
        let shape = GridShape::new(m, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(shape), &shape, |b, &s| {
            b.iter(|| Oracle::new().survey(black_box(s)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, formulas, involution_routes, oracle);
criterion_main!(benches);

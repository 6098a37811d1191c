use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pathpower_core::{
    check_coloring, construct_optimal, decompose, hypothesis_min_k, rc_exact, Layering,
    OracleConfig, PathPowerGraph,
};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct_optimal");
    for (n, m) in [(60, 10), (500, 7), (2000, 31)] {
        let g = PathPowerGraph::new(n, m).unwrap();
        let k = hypothesis_min_k(&g);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{n}x{m}")),
            &g,
            |b, g| b.iter(|| construct_optimal(black_box(g), k).unwrap()),
        );
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let g = PathPowerGraph::new(300, 9).unwrap();
    let k = hypothesis_min_k(&g) + 3;
    let coloring = construct_optimal(&g, k).unwrap();
    let layering = Layering::new(g);
    c.bench_function("check_coloring 300x9", |b| {
        b.iter(|| check_coloring(black_box(&coloring)))
    });
    c.bench_function("decompose 300x9", |b| {
        b.iter(|| decompose(black_box(&layering), black_box(&coloring)).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("rc_exact");
    group.sample_size(10);
    for (n, m) in [(7, 2), (9, 3), (9, 2)] {
        let g = PathPowerGraph::new(n, m).unwrap();
        let k = hypothesis_min_k(&g);
        for parallel in [false, true] {
            let cfg = OracleConfig {
                parallel,
                ..OracleConfig::default()
            };
            let id = format!("{n}x{m}{}", if parallel { "-par" } else { "" });
            group.bench_with_input(BenchmarkId::from_parameter(id), &g, |b, g| {
                b.iter(|| rc_exact(black_box(g), k, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, construction, verification, oracle);
criterion_main!(benches);

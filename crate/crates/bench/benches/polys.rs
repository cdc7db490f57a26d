use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use nilgraph_bench::{example_graph, seeded_graph};
use nilgraph_core::{
    cover_poly_by_extraction, cut_polynomial_laurent, cut_polynomial_xor,
    indep_poly_by_extraction, independence_polynomial, oracle, DEFAULT_MAX_TERMS,
};

fn bench_independence(c: &mut Criterion) {
    let mut group = c.benchmark_group("independence");
    for n in [12usize, 20, 28] {
        let g = seeded_graph(7, n, 0.3);
        group.bench_with_input(BenchmarkId::new("esp", n), &g, |b, g| {
            b.iter(|| independence_polynomial(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("extraction", n), &g, |b, g| {
            b.iter(|| indep_poly_by_extraction(black_box(g), DEFAULT_MAX_TERMS).unwrap())
        });
        if n <= 20 {
            group.bench_with_input(BenchmarkId::new("oracle", n), &g, |b, g| {
                b.iter(|| oracle::brute_independence(black_box(g)).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_cover_extraction(c: &mut Criterion) {
    let g = example_graph();
    c.bench_function("cover/extraction/example", |b| {
        b.iter(|| cover_poly_by_extraction(black_box(&g), DEFAULT_MAX_TERMS).unwrap())
    });
}

fn bench_cut(c: &mut Criterion) {
    let mut group = c.benchmark_group("cut");
    group.sample_size(10);
    let g = example_graph();
    group.bench_function("laurent/example", |b| {
        b.iter(|| cut_polynomial_laurent(black_box(&g), DEFAULT_MAX_TERMS).unwrap())
    });
    for n in [12usize, 20] {
        let g = seeded_graph(11, n, 0.3);
        group.bench_with_input(BenchmarkId::new("xor", n), &g, |b, g| {
            b.iter(|| cut_polynomial_xor(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_independence, bench_cover_extraction, bench_cut);
criterion_main!(benches);

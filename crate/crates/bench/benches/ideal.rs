use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use jackideal::{build_basis, jack_symbolic, reduce_membership};
use jackideal_bench::{partitions, top_degree_member};

fn jack(c: &mut Criterion) {
    let mut g = c.benchmark_group("jack_symbolic");
    g.sample_size(10);
    for (d, n) in [(4, 3), (6, 3), (6, 4)] {
        let lambdas = partitions(d, n);
        g.bench_with_input(BenchmarkId::from_parameter(format!("d{d}_n{n}")), &lambdas, |b, ls| {
            b.iter(|| {
                for l in ls {
                    black_box(jack_symbolic(l, n).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn basis(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_basis");
    g.sample_size(10);
    for (k, r, n, dmax) in [(1, 2, 3, 8), (2, 3, 3, 8), (2, 2, 4, 8)] {
        g.bench_function(format!("k{k}_r{r}_n{n}_d{dmax}"), |b| {
            b.iter(|| black_box(build_basis(k, r, n, dmax).unwrap()))
        });
    }
    g.finish();
}

fn membership(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduce_membership");
    for (k, r, n, dmax) in [(1, 2, 3, 10), (2, 3, 4, 10)] {
        let basis = build_basis(k, r, n, dmax).unwrap();
        let p = top_degree_member(&basis);
        g.bench_function(format!("k{k}_r{r}_n{n}_d{dmax}"), |b| {
            b.iter(|| black_box(reduce_membership(&p, &basis).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, jack, basis, membership);
criterion_main!(benches);

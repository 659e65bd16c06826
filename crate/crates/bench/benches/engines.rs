use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use pathbetti::betti::{graded_betti_table_with, OracleOptions};
use pathbetti::formula::{formula_betti_table, Family};
use pathbetti::homology::reduced_homology_dims;
use pathbetti::simplicial::omega_complex;
use pathbetti_bench::{graph_cases, lcg_matrix};

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (name, g, t) in graph_cases() {
        for memo in [false, true] {
            let opts = OracleOptions { prime: 32003, memo };
            let id = BenchmarkId::new(if memo { "memo" } else { "plain" }, &name);
            group.bench_with_input(id, &g, |b, g| b.iter(|| graded_betti_table_with(g, t, &opts).unwrap()));
        }
    }
    group.finish();
}

fn formula(c: &mut Criterion) {
    let mut group = c.benchmark_group("formula");
    for (family, n, t) in [(Family::Line, 60, 3), (Family::Cycle, 60, 3), (Family::Star, 60, 3)] {
        group.bench_function(format!("{family:?}{n}_t{t}"), |b| {
            b.iter(|| formula_betti_table(family, black_box(n), t).unwrap())
        });
    }
    group.finish();
}

fn omega_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("omega_homology");
    group.sample_size(10);
    for (n, t) in [(10, 2), (12, 3), (14, 2)] {
        let k = omega_complex(n, t).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_t{t}")), &k, |b, k| {
            b.iter(|| reduced_homology_dims(k, 32003).unwrap())
        });
    }
    group.finish();
}

fn rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for n in [64, 256] {
        for prime in [2, 32003] {
            let m = lcg_matrix(n, prime);
            group.bench_with_input(BenchmarkId::new(format!("gf{prime}"), n), &m, |b, m| b.iter(|| m.rank()));
        }
    }
    group.finish();
}

criterion_group!(benches, oracle, formula, omega_homology, rank);
criterion_main!(benches);

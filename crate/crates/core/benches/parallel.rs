use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qgue::par::Execution;
use qgue::qgue::{verify_suite_with, Grid, Suite};
use qgue::qxpoly::QGaussian;
use qgue::symschur::{apply_m2_with, schur_monomials, Partition};

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn harness(c: &mut Criterion) {
    let grid = Grid {
        max_weight: 4,
        max_vars: 3,
        max_n: 4,
    };
    let mut group = c.benchmark_group("verify_theorem3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| verify_suite_with(&grid, &[Suite::Theorem3], exec).unwrap());
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    // s_(2,1,1) at N = 4: the V^2 product has the most terms the guardrails allow cheaply.
    let kappa: Partition = "2,1,1".parse().unwrap();
    let f = schur_monomials(&kappa, 4).unwrap();
    let l = QGaussian::up_to(f.total_degree() + 8);
    let mut group = c.benchmark_group("oracle_m2");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| apply_m2_with(&f, &l, exec).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, harness, oracle);
criterion_main!(benches);

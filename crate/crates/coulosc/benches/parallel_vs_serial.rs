//! Criterion benchmark comparing the batch spectrum driver in its
//! data-parallel mode (default `parallel` feature, rayon) against the forced
//! sequential mode, on a workload of independent eigenvalue problems.

use criterion::{criterion_group, criterion_main, Criterion};

use coulosc::aim::{eigenvalue_with_options, ProblemSpec, Radius, SolverOptions};
use coulosc::batch::{map_collect, ExecMode};
use coulosc::BigReal;

fn workload(mode: ExecMode) -> Vec<f64> {
    let digits = 30;
    let tasks: Vec<u32> = vec![3, 4, 5, 6];
    let results = map_collect(mode, tasks, move |d| {
        let spec = ProblemSpec::new(
            BigReal::int(1, digits),
            BigReal::ratio(1, 2, digits),
            d,
            0,
            Radius::Free,
            digits,
        )
        .unwrap();
        let tol = BigReal::parse("1e-18", digits).unwrap();
        eigenvalue_with_options(&spec, 0, &tol, &SolverOptions::default())
            .unwrap()
            .energy
            .to_f64()
    });
    results
}

fn bench_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("ground_states_d3_to_d6");
    group.sample_size(10);
    group.bench_function("auto", |b| b.iter(|| workload(ExecMode::Auto)));
    group.bench_function("sequential", |b| b.iter(|| workload(ExecMode::Sequential)));
    group.finish();
}

criterion_group!(benches, bench_modes);
criterion_main!(benches);

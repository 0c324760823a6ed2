use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gtpt::report::{reproduce_table, TableSpec};
use gtpt::spectrum::{derive_coefficients, energy_eigenvalue};
use gtpt::superstat::superstat_partition_closed;
use gtpt::thermo::{partition_closed, partition_sum, thermo_functions};
use gtpt::{Convention, LevelRange, QuantumState, RadialWavefunction, ZSource};
use gtpt_bench::{beta_grid, generalized, table2};

fn energies(c: &mut Criterion) {
    let params = generalized(0.2);
    c.bench_function("energy_eigenvalue", |b| {
        b.iter(|| energy_eigenvalue(black_box(&params), QuantumState::new(3, 2)))
    });
    c.bench_function("derive_coefficients", |b| b.iter(|| derive_coefficients(black_box(&params), 2)));
    let spec = TableSpec::published(4).unwrap();
    c.bench_function("reproduce_table_4", |b| b.iter(|| reproduce_table(black_box(&spec))));
}

fn wavefunctions(c: &mut Criterion) {
    let mut group = c.benchmark_group("normalize");
    for alpha in [0.2, 0.02, 0.002] {
        let wf = RadialWavefunction::new(&table2(alpha), QuantumState::new(3, 1)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(alpha), &wf, |b, wf| b.iter(|| wf.normalize()));
    }
    group.finish();
}

fn partition(c: &mut Criterion) {
    let params = table2(0.02);
    let n_max = derive_coefficients(&params, 0).unwrap().n_max;
    let betas = beta_grid(30);
    c.bench_function("partition_closed_grid", |b| {
        b.iter(|| betas.iter().map(|&beta| partition_closed(&params, 0, beta, n_max).unwrap()).sum::<f64>())
    });
    c.bench_function("partition_sum_grid", |b| {
        b.iter(|| betas.iter().map(|&beta| partition_sum(&params, 0, beta, n_max).unwrap()).sum::<f64>())
    });
    c.bench_function("thermo_functions_grid", |b| {
        b.iter(|| {
            betas
                .iter()
                .map(|&beta| {
                    let range = LevelRange::UpTo(n_max);
                    thermo_functions(&params, 0, beta, range, Convention::Standard, ZSource::Closed).unwrap().cv
                })
                .sum::<f64>()
        })
    });
    c.bench_function("superstat_closed_grid", |b| {
        b.iter(|| betas.iter().map(|&beta| superstat_partition_closed(&params, 0, beta, 0.5).unwrap()).sum::<f64>())
    });
}

criterion_group!(benches, energies, wavefunctions, partition);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use onp_bench::{synthetic, worked_example};
use onp_core::{mine, GapConstraint, MiningConfig, Strategy};

fn worked(c: &mut Criterion) {
    let (db, config) = worked_example();
    let mut group = c.benchmark_group("worked_example");
    for strategy in Strategy::ALL {
        let config = config.clone().with_strategy(strategy);
        group.bench_function(strategy.name(), |b| b.iter(|| mine(&db, &config).unwrap()));
    }
    group.finish();
}

fn scaled(c: &mut Criterion) {
    let db = synthetic(10_000);
    let base = MiningConfig::new(400, GapConstraint::new(0, 2).unwrap()).unwrap().with_max_len(4);
    let mut group = c.benchmark_group("synthetic_10k");
    group.sample_size(10);
    for strategy in Strategy::ALL {
        let config = base.clone().with_strategy(strategy);
        group.bench_with_input(BenchmarkId::from_parameter(strategy), &config, |b, config| {
            b.iter(|| mine(&db, config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, worked, scaled);
criterion_main!(benches);

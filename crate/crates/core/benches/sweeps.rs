use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use keycrystal::verify::{run, Suite, VerifyConfig};
use keycrystal::Execution;

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for suite in [Suite::Bijection, Suite::RsEquality, Suite::Intertwine] {
        for execution in [Execution::Sequential, Execution::Parallel] {
            let config = VerifyConfig { execution, ..VerifyConfig::default() };
            group.bench_with_input(BenchmarkId::new(suite.name(), format!("{execution:?}")), &config, |b, config| {
                b.iter(|| {
                    let report = run(suite, config).unwrap();
                    assert!(report.passed());
                    report.checks
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sdl_core::harness::{run_laws, run_suite, Suite, SuiteConfig};
use sdl_core::par::Exec;

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn config(exec: Exec, max_atoms: usize, max_points: usize) -> SuiteConfig {
    SuiteConfig {
        suite: Suite::Finite,
        max_atoms,
        max_points,
        exec,
        ..SuiteConfig::default()
    }
}

/// Laws spread across the pool one per task.
fn bench_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("finite_suite");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        for (atoms, points) in [(2, 3), (3, 4)] {
            let cfg = config(exec, atoms, points);
            group.bench_with_input(BenchmarkId::new(name, format!("{atoms}a{points}p")), &cfg, |b, cfg| {
                b.iter(|| black_box(run_suite(cfg).unwrap()))
            });
        }
    }
    group.finish();
}

/// The heaviest single laws, where only the law-level split applies.
fn bench_heavy_laws(c: &mut Criterion) {
    let laws = [
        "zalgebra.functor_laws",
        "finspace.dense_transfer",
        "compactify.category_laws",
    ];
    let mut group = c.benchmark_group("heavy_laws");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        let cfg = config(exec, 3, 5);
        group.bench_with_input(BenchmarkId::new(name, "3a5p"), &cfg, |b, cfg| {
            b.iter(|| black_box(run_laws(&laws, cfg).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_suite, bench_heavy_laws);
criterion_main!(benches);

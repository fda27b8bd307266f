//! Sequential against rayon execution for the hot kernels.
//!
//! `cargo bench -p snlie` compares both strategies; with
//! `--no-default-features` only the sequential rows are measured.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use snlie::modrep::build_lie_module_with;
use snlie::{Exec, GFMatrix};

fn strategies() -> Vec<(&'static str, Exec)> {
    #[allow(unused_mut)]
    let mut out = vec![("sequential", Exec::Sequential)];
    #[cfg(feature = "parallel")]
    out.push(("parallel", Exec::Parallel));
    out
}

fn random_matrix(rows: usize, cols: usize, p: u32, seed: u64) -> GFMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GFMatrix::from_fn(rows, cols, p, |_, _| rng.gen_range(0..p))
}

fn linear_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("ffla");
    group.sample_size(10);
    for (p, size) in [(2u32, 1024usize), (3, 384), (7, 384)] {
        let a = random_matrix(size, size, p, 1);
        let b = random_matrix(size, size, p, 2);
        for (name, exec) in strategies() {
            let id = format!("p{p}-{size}");
            group.bench_with_input(BenchmarkId::new(format!("rref/{name}"), &id), &a, |bench, a| {
                bench.iter(|| a.rref_with(exec))
            });
            group.bench_with_input(BenchmarkId::new(format!("mat_mul/{name}"), &id), &(&a, &b), |bench, (a, b)| {
                bench.iter(|| a.mat_mul_with(b, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn lie_module(c: &mut Criterion) {
    let mut group = c.benchmark_group("lie");
    group.sample_size(10);
    for (name, exec) in strategies() {
        group.bench_function(BenchmarkId::new("build", format!("n7-p2/{name}")), |bench| {
            bench.iter(|| build_lie_module_with(7, 2, exec).unwrap())
        });
        group.bench_function(BenchmarkId::new("build", format!("n7-p5/{name}")), |bench| {
            bench.iter(|| build_lie_module_with(7, 5, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, linear_algebra, lie_module);
criterion_main!(benches);

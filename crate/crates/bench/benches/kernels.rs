use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use frse::anderson::{build_hamiltonian, compute_modes, overlap_tensor, RandomPotential, DEFAULT_CUTOFF, DEFAULT_ENTRY_BUDGET};
use frse::fracops::apply_riesz;
use frse::ftse::{ml_evolution, HamiltonianMatrix};
use frse::sne::{sne_evolve, GravityForm};
use frse::specfun::{frac_free_kernel, mittag_leffler, KernelQuery};
use frse::{Complex64, FracParams, Grid1D};
use frse_bench::{gaussian, pumped};
use std::hint::black_box;

fn riesz(c: &mut Criterion) {
    let mut g = c.benchmark_group("apply_riesz");
    for n in [1024, 8192] {
        let f = gaussian(n, 20.0, 1.0);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| apply_riesz(black_box(f), 1.5).unwrap()));
    }
    g.finish();
}

fn ml(c: &mut Criterion) {
    let zs = [Complex64::new(0.5, 0.2), Complex64::new(-8.0, 1.0), Complex64::new(0.0, 12.0)];
    let mut g = c.benchmark_group("mittag_leffler");
    for (i, z) in zs.iter().enumerate() {
        g.bench_with_input(BenchmarkId::new("nu0.6", i), z, |b, z| b.iter(|| mittag_leffler(0.6, 1.0, black_box(*z)).unwrap()));
    }
    g.finish();
}

fn kernel(c: &mut Criterion) {
    let q = KernelQuery { x: 3.0, tau: 1.0, alpha: 1.5, coeff: Complex64::new(0.0, 0.5) };
    c.bench_function("frac_free_kernel alpha=1.5", |b| b.iter(|| frac_free_kernel(black_box(q)).unwrap()));
}

fn sne(c: &mut Criterion) {
    let f = pumped(256);
    let p = FracParams { alpha: 1.5, g: 1.0, ..Default::default() };
    c.bench_function("sne 100 steps n=256", |b| b.iter(|| sne_evolve(black_box(&f), &p, GravityForm::Spectral, 0.1, 1e-3, 100).unwrap()));
}

fn ftse(c: &mut Criterion) {
    let h = HamiltonianMatrix::discretized(-5.0, 5.0, 32, 1.0, 1.0, |x| 0.5 * x * x).unwrap();
    let mut psi = vec![Complex64::new(0.0, 0.0); 32];
    psi[16] = Complex64::new(1.0, 0.0);
    c.bench_function("ml_evolution dim=32", |b| b.iter(|| ml_evolution(&h, black_box(&psi), 1.0, 0.7, 1.0).unwrap()));
}

fn tensor(c: &mut Criterion) {
    let grid = Grid1D::symmetric(32.0, 64).unwrap();
    let pot = RandomPotential::uniform(64, 2.0, 1).unwrap();
    let m = compute_modes(&build_hamiltonian(&grid, &pot, 1.5, 1.0).unwrap(), grid.dx).unwrap();
    c.bench_function("overlap_tensor 24 modes", |b| b.iter(|| overlap_tensor(&m, 0..24, DEFAULT_CUTOFF, DEFAULT_ENTRY_BUDGET).unwrap()));
}

criterion_group!(benches, riesz, ml, kernel, sne, ftse, tensor);
criterion_main!(benches);

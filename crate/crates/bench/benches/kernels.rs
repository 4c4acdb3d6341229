use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use vh_core::angular::{gaunt_integral, wigner_d, EulerAngles, HarmonicIndex};
use vh_core::harvesting::{compute_terms, time_integral_scaled, ModelKind};
use vh_core::specfun::faddeeva_w;
use vh_core::survey::{PointParams, ScanSettings};

fn special_functions(c: &mut Criterion) {
    let mut g = c.benchmark_group("specfun");
    for z in [Complex64::new(0.3, 0.2), Complex64::new(4.0, 0.5), Complex64::new(-30.0, 2.0)] {
        g.bench_with_input(BenchmarkId::new("faddeeva_w", z), &z, |b, z| b.iter(|| faddeeva_w(black_box(*z))));
    }
    g.bench_function("time_integral_scaled", |b| {
        b.iter(|| time_integral_scaled(black_box(12.0), black_box(12.0), black_box(3.5), 0.0, black_box(10.0)))
    });
    g.finish();
}

fn angular(c: &mut Criterion) {
    let angles = EulerAngles::new(0.3, 1.1, -0.7);
    c.bench_function("wigner_d l=2", |b| b.iter(|| wigner_d(2, black_box(1), black_box(-1), angles)));
    let set = [
        HarmonicIndex::conj(1, 0),
        HarmonicIndex::new(1, 0),
        HarmonicIndex::new(2, 1),
        HarmonicIndex::conj(2, 1),
    ];
    c.bench_function("gaunt_integral 4 harmonics", |b| b.iter(|| gaunt_integral(black_box(&set))));
}

fn detector_terms(c: &mut Criterion) {
    let settings = ScanSettings::default();
    let mut g = c.benchmark_group("compute_terms");
    g.sample_size(20);
    for model in [ModelKind::EmDipole, ModelKind::UdwScalar] {
        let p = PointParams { a0_omega: 0.001, omega_t: 12.0, d_over_t: 11.0, tba_over_t: 10.0, ..PointParams::default() };
        let pair = p.pair(model, &settings).unwrap();
        g.bench_function(model.name(), |b| b.iter(|| compute_terms(black_box(&pair))));
    }
    g.finish();
}

criterion_group!(benches, special_functions, angular, detector_terms);
criterion_main!(benches);

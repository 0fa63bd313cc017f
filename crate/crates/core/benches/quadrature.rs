//! Sequential against parallel evaluation of the quadrature-heavy paths.
//! Without the `parallel` feature both variants run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

use hahnlab::numerics::log_gamma;
use hahnlab::orthogonality::{chahn_gram, WeightParams};
use hahnlab::quadrature::{integrate_line, QuadratureConfig};

fn modes() -> [(&'static str, bool); 2] {
    [("sequential", false), ("parallel", true)]
}

fn gram(c: &mut Criterion) {
    let mut group = c.benchmark_group("chahn_gram");
    group.sample_size(10);
    let w = WeightParams::new(
        Complex64::new(1.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.75, 0.0),
        Complex64::new(1.25, 0.0),
    );
    for size in [4, 8] {
        for (label, parallel) in modes() {
            let quad = QuadratureConfig::default().with_parallel(parallel);
            group.bench_with_input(BenchmarkId::new(label, size), &size, |b, &size| {
                b.iter(|| chahn_gram(size, &w, &quad).unwrap())
            });
        }
    }
    group.finish();
}

fn line(c: &mut Criterion) {
    let mut group = c.benchmark_group("integrate_line");
    // Barnes integrand at a = b = c = d = 1/2: |Γ(1/2 + ix)|^4 = π²/cosh²(πx).
    let f = |x: f64| -> hahnlab::Result<Complex64> {
        let g = log_gamma(Complex64::new(0.5, x))?;
        Ok((g.as_log() * 4.0).exp())
    };
    let pi = std::f64::consts::PI;
    let envelope = move |x: f64| 4.0 * pi * pi * (-2.0 * pi * x.abs()).exp();
    for (label, parallel) in modes() {
        let quad = QuadratureConfig::default().with_parallel(parallel);
        group.bench_function(label, |b| b.iter(|| integrate_line(&f, &envelope, &quad).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, gram, line);
criterion_main!(benches);

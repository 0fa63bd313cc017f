//! Adaptive Gauss–Kronrod quadrature on the real line.
//!
//! Integrals over ℝ are truncated to `[−Z, Z]`, where `Z` is the smallest
//! radius at which a caller-supplied envelope certifies the two tails to be
//! below `abs_tol · 10^(−truncation_margin)`. The truncated interval is cut
//! into panels no wider than one unit (or half a period of an oscillatory
//! factor) and refined by bisection. Each round bisects the panels with the
//! largest error estimates until the remaining estimate would fall below
//! half the target. Panels of one round are evaluated concurrently when the
//! configuration allows it. Contributions are always summed in order of
//! position, so the result does not depend on scheduling.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parallel::{self, map_ordered};
use crate::report::QuadDiagnostics;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Decades of envelope decay below `abs_tol` required at the truncation
    /// radius.
    pub truncation_margin: f64,
    pub max_subdivisions: usize,
    /// Evaluate panels on the rayon pool (ignored without the `parallel`
    /// feature).
    pub parallel: bool,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            truncation_margin: 2.0,
            max_subdivisions: 2000,
            parallel: parallel::available(),
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.rel_tol) || !positive(self.abs_tol) {
            return Err(Error::Domain(format!(
                "quadrature tolerances must be positive (rel_tol {}, abs_tol {})",
                self.rel_tol, self.abs_tol
            )));
        }
        if !(self.truncation_margin.is_finite() && self.truncation_margin >= 0.0) {
            return Err(Error::Domain(format!(
                "truncation margin must be nonnegative, got {}",
                self.truncation_margin
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::Domain("max_subdivisions must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_parallel(self, parallel: bool) -> Self {
        QuadratureConfig { parallel, ..self }
    }
}

/// Integral value with its bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    /// Quadrature error estimate plus the certified tail bound.
    pub error: f64,
    pub evaluations: u64,
    /// Truncation radius (half-width of the integration interval).
    pub radius: f64,
    /// Estimate of `∫|f|`, the scale against which rounding is judged.
    pub l1_norm: f64,
}

impl QuadResult {
    pub fn diagnostics(&self) -> QuadDiagnostics {
        QuadDiagnostics {
            evaluations: self.evaluations,
            estimated_error: self.error,
        }
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const EVALS_PER_PANEL: u64 = 21;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    resabs: f64,
}

fn sample<F>(f: &F, x: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let v = f(x)?;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(x))
    }
}

/// 21-point Kronrod rule with the embedded 10-point Gauss rule, using the
/// QUADPACK error heuristic on the complex difference of the two.
fn gk21<F>(f: &F, a: f64, b: f64) -> Result<Panel>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv1 = [Complex64::new(0.0, 0.0); 10];
    let mut fv2 = [Complex64::new(0.0, 0.0); 10];
    let fc = sample(f, center)?;
    let mut resk = fc * WGK[10];
    let mut resg = Complex64::new(0.0, 0.0);
    let mut resabs = fc.norm() * WGK[10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = sample(f, center - dx)?;
        let f2 = sample(f, center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += (f1 + f2) * WGK[j];
        resabs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            resg += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = resk * 0.5;
    let mut resasc = (fc - mean).norm() * WGK[10];
    for j in 0..10 {
        resasc += ((fv1[j] - mean).norm() + (fv2[j] - mean).norm()) * WGK[j];
    }
    let scale = half.abs();
    let resabs = resabs * scale;
    let resasc = resasc * scale;
    let mut error = ((resk - resg) * half).norm();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Panel {
        a,
        b,
        value: resk * half,
        error,
        resabs,
    })
}

fn evaluate_panels<F>(f: &F, spans: &[(f64, f64)], parallel: bool) -> Result<Vec<Panel>>
where
    F: Fn(f64) -> Result<Complex64> + Sync,
{
    map_ordered(spans, parallel, |&(a, b)| gk21(f, a, b))
        .into_iter()
        .collect()
}

/// Adaptive integral of `f` over `[a, b]` with initial panels no wider than
/// `max_width`.
pub fn integrate_interval<F>(
    f: &F,
    a: f64,
    b: f64,
    max_width: f64,
    config: &QuadratureConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64> + Sync,
{
    config.validate()?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::Domain(format!("invalid integration interval [{a}, {b}]")));
    }
    if !(max_width.is_finite() && max_width > 0.0) {
        return Err(Error::Domain(format!("invalid panel width {max_width}")));
    }
    let count = ((b - a) / max_width).ceil().max(1.0) as usize;
    let step = (b - a) / count as f64;
    let spans: Vec<(f64, f64)> = (0..count)
        .map(|k| {
            let lo = a + step * k as f64;
            let hi = if k + 1 == count { b } else { a + step * (k + 1) as f64 };
            (lo, hi)
        })
        .collect();
    let mut panels = evaluate_panels(f, &spans, config.parallel)?;
    let mut evaluations = EVALS_PER_PANEL * count as u64;
    let mut subdivisions = 0usize;
    loop {
        let mut value = Complex64::new(0.0, 0.0);
        let mut error = 0.0;
        let mut l1 = 0.0;
        for p in &panels {
            value += p.value;
            error += p.error;
            l1 += p.resabs;
        }
        let target = config
            .abs_tol
            .max(config.rel_tol * value.norm())
            .max(100.0 * f64::EPSILON * l1);
        if error <= target {
            return Ok(QuadResult {
                value,
                error,
                evaluations,
                radius: 0.5 * (b - a),
                l1_norm: l1,
            });
        }
        if subdivisions >= config.max_subdivisions {
            return Err(Error::NonConvergence {
                subdivisions,
                estimated_error: error,
            });
        }
        let mut order: Vec<usize> = (0..panels.len()).collect();
        order.sort_by(|&i, &j| panels[j].error.total_cmp(&panels[i].error).then(i.cmp(&j)));
        let budget = config.max_subdivisions - subdivisions;
        let mut remaining = error;
        let mut chosen = Vec::new();
        for &i in &order {
            if !chosen.is_empty() && (remaining <= 0.5 * target || chosen.len() >= budget) {
                break;
            }
            chosen.push(i);
            remaining -= panels[i].error;
        }
        let mut halves = Vec::with_capacity(2 * chosen.len());
        for &i in &chosen {
            let p = panels[i];
            let mid = 0.5 * (p.a + p.b);
            if !(p.a < mid && mid < p.b) {
                return Err(Error::NonConvergence {
                    subdivisions,
                    estimated_error: error,
                });
            }
            halves.push((p.a, mid));
            halves.push((mid, p.b));
        }
        let fresh = evaluate_panels(f, &halves, config.parallel)?;
        evaluations += EVALS_PER_PANEL * fresh.len() as u64;
        subdivisions += chosen.len();
        chosen.sort_unstable();
        let mut next = Vec::with_capacity(panels.len() + chosen.len());
        let mut skip = chosen.iter().peekable();
        for (i, p) in panels.iter().enumerate() {
            if skip.peek() == Some(&&i) {
                skip.next();
            } else {
                next.push(*p);
            }
        }
        next.extend(fresh);
        next.sort_by(|p, q| p.a.total_cmp(&q.a));
        panels = next;
    }
}

const MAX_RADIUS: f64 = 1.0e4;

/// Upper bound on `∫_Z^∞ env` for an envelope that is nonincreasing beyond
/// `Z`, by a right Riemann sum with unit steps.
fn tail_bound<E: Fn(f64) -> f64>(envelope: &E, start: f64, direction: f64) -> f64 {
    let mut sum = 0.0;
    for j in 0..100_000 {
        let term = envelope(direction * (start + j as f64)).abs();
        if !term.is_finite() {
            return f64::INFINITY;
        }
        sum += term;
        if term <= 1e-6 * sum || term == 0.0 {
            break;
        }
    }
    sum
}

/// Smallest radius (to a quarter unit) at which both tails of the envelope
/// integrate to less than `abs_tol · 10^(−truncation_margin)`.
pub fn truncation_radius<E: Fn(f64) -> f64>(envelope: &E, config: &QuadratureConfig) -> Result<f64> {
    config.validate()?;
    let threshold = config.abs_tol * 10f64.powf(-config.truncation_margin);
    let tails = |z: f64| tail_bound(envelope, z, 1.0) + tail_bound(envelope, z, -1.0);
    let mut hi = 1.0;
    while tails(hi) >= threshold {
        hi *= 2.0;
        if hi > MAX_RADIUS {
            return Err(Error::Truncation {
                threshold,
                radius: MAX_RADIUS,
            });
        }
    }
    let mut lo = if hi > 1.0 { hi / 2.0 } else { 0.0 };
    while hi - lo > 0.25 {
        let mid = 0.5 * (lo + hi);
        if tails(mid) < threshold {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `∫_ℝ f` for an integrand bounded by `envelope` away from the origin.
pub fn integrate_line<F, E>(f: &F, envelope: &E, config: &QuadratureConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64> + Sync,
    E: Fn(f64) -> f64,
{
    integrate_line_oscillatory(f, envelope, 0.0, config)
}

/// As [`integrate_line`], for an integrand carrying an oscillatory factor of
/// angular frequency `frequency`; panels are kept to half a period.
pub fn integrate_line_oscillatory<F, E>(
    f: &F,
    envelope: &E,
    frequency: f64,
    config: &QuadratureConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64> + Sync,
    E: Fn(f64) -> f64,
{
    let radius = truncation_radius(envelope, config)?;
    let width = if frequency != 0.0 {
        (std::f64::consts::PI / frequency.abs()).min(1.0)
    } else {
        1.0
    };
    let mut r = integrate_interval(f, -radius, radius, width, config)?;
    let threshold = config.abs_tol * 10f64.powf(-config.truncation_margin);
    r.error += threshold;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sech2(x: f64) -> f64 {
        let e = (-2.0 * x.abs()).exp();
        4.0 * e / ((1.0 + e) * (1.0 + e))
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn sech_squared_family() {
        for a in [PI / 2.0, PI, 2.0 * PI] {
            let env = move |x: f64| 4.0 * (-2.0 * a * x.abs()).exp() * (1.0 + x * x);
            let r = integrate_line(&|x| Ok(Complex64::new(sech2(a * x), 0.0)), &env, &cfg()).unwrap();
            assert!((r.value.re - 2.0 / a).abs() < 1e-10 * 2.0 / a, "a={a}: {}", r.value);
            // ∫ u² sech²(a u) du = π²/(6a³)
            let r2 = integrate_line(&|x| Ok(Complex64::new(x * x * sech2(a * x), 0.0)), &env, &cfg())
                .unwrap();
            let want = PI * PI / (6.0 * a * a * a);
            assert!((r2.value.re - want).abs() < 1e-10 * want, "a={a}: {}", r2.value);
        }
    }

    #[test]
    fn spec_examples() {
        let env = |x: f64| 4.0 * (-PI * x.abs()).exp() * (1.0 + x * x);
        let r = integrate_line(&|x| Ok(Complex64::new(sech2(PI * x / 2.0), 0.0)), &env, &cfg()).unwrap();
        assert!((r.value.re - 4.0 / PI).abs() < 1e-12);
        let r = integrate_line(
            &|x| Ok(Complex64::new(x * x * sech2(PI * x / 2.0), 0.0)),
            &env,
            &cfg(),
        )
        .unwrap();
        assert!((r.value.re - 4.0 / (3.0 * PI)).abs() < 1e-12);
        let r = integrate_line(
            &|x| Ok(Complex64::new(x * x * x * sech2(PI * x / 2.0), 0.0)),
            &env,
            &cfg(),
        )
        .unwrap();
        assert!(r.value.norm() < 1e-14);
    }

    #[test]
    fn oscillatory_sech_is_self_reciprocal() {
        // ∫ e^{−ixz} sech x dx = π sech(πz/2)
        for z in [0.0, 1.0, 5.0, 12.0] {
            let f = move |x: f64| {
                let s = 2.0 * (-x.abs()).exp() / (1.0 + (-2.0 * x.abs()).exp());
                Ok(Complex64::from_polar(s, -x * z))
            };
            let env = |x: f64| 2.0 * (-x.abs()).exp();
            let r = integrate_line_oscillatory(&f, &env, z, &cfg()).unwrap();
            let want = PI / (PI * z / 2.0).cosh();
            assert!((r.value - want).norm() < 1e-10 * want.max(1e-3), "z={z}: {}", r.value);
        }
    }

    #[test]
    fn sequential_and_parallel_agree_bitwise() {
        let f = |x: f64| Ok(Complex64::new((x * 3.0).cos() * (-x * x / 4.0).exp(), x.sin() * sech2(x)));
        let env = |x: f64| (-x * x / 4.0).exp() + 4.0 * (-2.0 * x.abs()).exp();
        let c = QuadratureConfig {
            abs_tol: 1e-10,
            ..cfg()
        };
        let a = integrate_line(&f, &env, &c.with_parallel(false)).unwrap();
        let b = integrate_line(&f, &env, &c.with_parallel(true)).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn failures_surface_as_errors() {
        let env = |x: f64| (-x.abs()).exp();
        let r = integrate_line(&|_| Ok(Complex64::new(f64::NAN, 0.0)), &env, &cfg());
        assert!(matches!(r, Err(Error::NonFinite(_))));
        let tight = QuadratureConfig {
            max_subdivisions: 1,
            rel_tol: 1e-15,
            abs_tol: 1e-300,
            ..cfg()
        };
        let r = integrate_interval(&|x: f64| Ok(Complex64::new(x.abs().sqrt(), 0.0)), -1.0, 1.0, 2.0, &tight);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
        let flat = |_: f64| 1.0;
        assert!(matches!(truncation_radius(&flat, &cfg()), Err(Error::Truncation { .. })));
        let bad = QuadratureConfig { rel_tol: 0.0, ..cfg() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn radius_tracks_decay_rate() {
        let c = cfg();
        let fast = truncation_radius(&|x: f64| (-2.0 * PI * x.abs()).exp(), &c).unwrap();
        let slow = truncation_radius(&|x: f64| (-0.5 * x.abs()).exp(), &c).unwrap();
        assert!(fast < slow);
        // e^{−2πZ}/(1 − e^{−2π}) ≈ 5e−17 per side
        assert!(fast > 5.0 && fast < 7.5, "{fast}");
    }
}

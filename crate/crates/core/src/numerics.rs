//! Complex gamma machinery in double precision.
//!
//! Everything that multiplies gamma values together goes through
//! [`LogGammaValue`] so that products like `Γ(α+iz)Γ(β−iz)Γ(a−iz)Γ(b+iz)`
//! are assembled as sums of logarithms and exponentiated exactly once.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used for every floating-point parameter and argument.
pub type ComplexValue = Complex64;

/// Largest `log_modulus` whose exponential is still a finite `f64`.
const MAX_LOG: f64 = 709.782_712_893_384;

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey's coefficients).
const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// `log Γ(z)` split into modulus and principal-branch phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGammaValue {
    pub log_modulus: f64,
    /// Radians, in `(−π, π]`.
    pub phase: f64,
}

impl LogGammaValue {
    fn from_log(w: Complex64) -> Self {
        LogGammaValue {
            log_modulus: w.re,
            phase: principal_phase(w.im),
        }
    }

    pub fn as_log(&self) -> Complex64 {
        Complex64::new(self.log_modulus, self.phase)
    }

    /// Exponentiates, failing if the modulus is not representable.
    pub fn to_complex(&self) -> Result<Complex64> {
        exp_checked(self.as_log())
    }
}

fn principal_phase(phase: f64) -> f64 {
    let r = phase.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// `exp(w)` with overflow reported instead of returning infinity.
pub fn exp_checked(w: Complex64) -> Result<Complex64> {
    if w.re.is_nan() || w.im.is_nan() {
        return Err(Error::Overflow(format!("log-domain value {w} is not a number")));
    }
    if w.re > MAX_LOG {
        return Err(Error::Overflow(format!(
            "log-modulus {} exceeds double range",
            w.re
        )));
    }
    let modulus = w.re.exp();
    let phase = principal_phase(w.im);
    Ok(Complex64::new(modulus * phase.cos(), modulus * phase.sin()))
}

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Lanczos series, valid for `Re(z) >= 1/2`.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let t = z + LANCZOS_G;
    let head = (z + 0.5) * t.ln() - t;
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    for (j, c) in LANCZOS_COEFFS.iter().enumerate() {
        ser += *c / (z + (j + 1) as f64);
    }
    head + (ser * SQRT_2PI / z).ln()
}

/// `log sin(πz)` without overflowing for large `|Im z|`, modulo `2πi`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let w = z * PI;
    let i = Complex64::i();
    if w.im.abs() < 30.0 {
        w.sin().ln()
    } else if w.im > 0.0 {
        // sin w = e^{-iw} (1 - e^{2iw}) / (-2i)
        let small = (i * w * 2.0).exp();
        -i * w + (Complex64::new(1.0, 0.0) - small).ln() - std::f64::consts::LN_2
            + i * (PI / 2.0)
    } else {
        // sin w = e^{iw} (1 - e^{-2iw}) / (2i)
        let small = (-i * w * 2.0).exp();
        i * w + (Complex64::new(1.0, 0.0) - small).ln() - std::f64::consts::LN_2
            - i * (PI / 2.0)
    }
}

fn ln_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        ln_gamma_right(z)
    } else {
        // Γ(z)Γ(1−z) = π / sin(πz)
        Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(Complex64::new(1.0, 0.0) - z)
    }
}

/// Principal-branch `log Γ(z)`.
pub fn log_gamma(z: ComplexValue) -> Result<LogGammaValue> {
    if is_pole(z) {
        return Err(Error::GammaPole(z.re));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("log_gamma of non-finite argument {z}")));
    }
    Ok(LogGammaValue::from_log(ln_gamma_unchecked(z)))
}

pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    log_gamma(z)?.to_complex()
}

/// Rising factorial `a(a+1)···(a+k−1)`.
pub fn pochhammer(a: ComplexValue, k: usize) -> ComplexValue {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}

/// Euler beta function `Γ(α)Γ(β)/Γ(α+β)` for `Re α, Re β > 0`.
pub fn beta(alpha: ComplexValue, beta: ComplexValue) -> Result<ComplexValue> {
    if alpha.re <= 0.0 || beta.re <= 0.0 {
        return Err(Error::Domain(format!(
            "beta({alpha}, {beta}) requires positive real parts"
        )));
    }
    let w = log_gamma(alpha)?.as_log() + log_gamma(beta)?.as_log()
        - log_gamma(alpha + beta)?.as_log();
    exp_checked(w)
}

/// Sum of log-gammas; the caller exponentiates once.
pub fn log_gamma_sum(args: &[ComplexValue]) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &z in args {
        acc += log_gamma(z)?.as_log();
    }
    Ok(acc)
}

/// The continuous Hahn weight `Γ(α+iz)Γ(β−iz)Γ(a−iz)Γ(b+iz)`.
pub fn hahn_weight(
    z: f64,
    alpha: ComplexValue,
    beta: ComplexValue,
    a: ComplexValue,
    b: ComplexValue,
) -> Result<ComplexValue> {
    for (name, p) in [("alpha", alpha), ("beta", beta), ("a", a), ("b", b)] {
        if p.re <= 0.0 {
            return Err(Error::Domain(format!(
                "hahn_weight needs Re({name}) > 0, got {p}"
            )));
        }
    }
    let iz = Complex64::new(0.0, z);
    exp_checked(log_gamma_sum(&[alpha + iz, beta - iz, a - iz, b + iz])?)
}

/// Log-domain form of [`hahn_weight`], for callers that fold further gamma
/// factors into one exponentiation.
pub fn log_hahn_weight(
    z: f64,
    alpha: ComplexValue,
    beta: ComplexValue,
    a: ComplexValue,
    b: ComplexValue,
) -> Result<Complex64> {
    let iz = Complex64::new(0.0, z);
    log_gamma_sum(&[alpha + iz, beta - iz, a - iz, b + iz])
}

/// `ln(1 + e^y)` without overflow or cancellation.
pub fn softplus(y: f64) -> f64 {
    y.max(0.0) + (-y.abs()).exp().ln_1p()
}

/// `(ln(1 − tanh x), ln(1 + tanh x))`, accurate in both tails where
/// `1 ∓ tanh x` underflows relative to one.
pub fn log_one_minus_plus_tanh(x: f64) -> (f64, f64) {
    let ln2 = std::f64::consts::LN_2;
    (ln2 - softplus(2.0 * x), ln2 - softplus(-2.0 * x))
}

/// `ln[(1 − tanh x)^α (1 + tanh x)^β]` on the principal branch; both bases
/// are positive, so the imaginary part is `Im α·ln(1−t) + Im β·ln(1+t)`.
pub fn log_tanh_weight(x: f64, alpha: ComplexValue, beta: ComplexValue) -> Complex64 {
    let (lm, lp) = log_one_minus_plus_tanh(x);
    alpha * lm + beta * lp
}

/// Natural log of `|Γ(x+iy)|`, used for decay envelopes.
pub fn log_abs_gamma(z: ComplexValue) -> Result<f64> {
    Ok(log_gamma(z)?.log_modulus)
}

/// `x / sin(x)` with the removable singularity at zero handled by series.
pub fn x_over_sin(x: ComplexValue) -> ComplexValue {
    if x.norm() < 1e-6 {
        let x2 = x * x;
        Complex64::new(1.0, 0.0) + x2 / 6.0 + x2 * x2 * (7.0 / 360.0)
    } else {
        x / x.sin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1e-300)
    }

    #[test]
    fn tanh_weight_logs_are_accurate_in_the_tails() {
        for x in [-40.0, -3.0, -0.2, 0.0, 0.7, 5.0, 40.0] {
            let (lm, lp) = log_one_minus_plus_tanh(x);
            // 1 − tanh x = 2/(1+e^{2x}), 1 + tanh x = 2/(1+e^{−2x})
            let want_m = (2.0f64).ln() - (2.0 * x).exp().ln_1p();
            let want_p = (2.0f64).ln() - (-2.0 * x).exp().ln_1p();
            assert!((lm - want_m).abs() < 1e-14 * want_m.abs().max(1.0), "x={x}");
            assert!((lp - want_p).abs() < 1e-14 * want_p.abs().max(1.0), "x={x}");
        }
        let w = log_tanh_weight(0.3, c(0.5, 0.25), c(1.5, -1.0)).exp();
        let t = 0.3f64.tanh();
        let want = Complex64::new(1.0 - t, 0.0).powc(c(0.5, 0.25)) * Complex64::new(1.0 + t, 0.0).powc(c(1.5, -1.0));
        assert!((w - want).norm() < 1e-14);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(c(0.3, 1.0), 0), c(1.0, 0.0));
        assert_eq!(pochhammer(c(1.0, 0.0), 4), c(24.0, 0.0));
        assert_eq!(pochhammer(c(3.0, 0.0), 4), c(360.0, 0.0));
    }

    #[test]
    fn gamma_small_integers_and_half() {
        assert_relative_eq!(gamma(c(1.0, 0.0)).unwrap().re, 1.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(c(5.0, 0.0)).unwrap().re, 24.0, max_relative = 1e-14);
        let g = gamma(c(0.5, 0.0)).unwrap();
        assert_relative_eq!((g * g).re, PI, max_relative = 1e-14);
    }

    #[test]
    fn log_gamma_matches_reference_values() {
        // 30-digit reference values of log Γ (mpmath.loggamma); compared modulo 2πi.
        let cases = [
            (c(2.5, 3.0), c(-1.470_954_610_348_841_7, 2.822_615_638_260_799_5)),
            (c(0.25, -7.5), c(-11.365_620_394_646_528, -7.220_462_821_847_432)),
            (c(-3.7, 2.2), c(-7.259_769_349_970_58, -9.940_188_451_078_55)),
            (c(10.0, -15.0), c(3.652_766_868_488_681, -37.711_383_175_918_62)),
            (c(0.1, 0.0), c(2.252_712_651_734_206, 0.0)),
            (c(-0.5, 0.0), c(1.265_512_123_484_645_4, -PI)),
            (c(1e-3, 40.0), c(-63.753_665_334_263_6, 106.769_279_908_244_23)),
        ];
        for (z, want) in cases {
            let got = log_gamma(z).unwrap();
            assert!(
                (got.log_modulus - want.re).abs() <= 1e-13 * want.re.abs().max(1.0),
                "modulus at {z}: {} vs {}",
                got.log_modulus,
                want.re
            );
            let dphase = principal_phase(got.phase - want.im);
            assert!(dphase.abs() < 1e-11, "phase at {z}: {} vs {}", got.phase, want.im);
            assert!(got.phase > -PI && got.phase <= PI);
        }
    }

    #[test]
    fn poles_are_errors() {
        for z in [0.0, -1.0, -2.0, -17.0] {
            assert!(matches!(log_gamma(c(z, 0.0)), Err(Error::GammaPole(_))));
        }
        assert!(log_gamma(c(-1.0, 1e-9)).is_ok());
    }

    #[test]
    fn beta_examples() {
        assert_relative_eq!(beta(c(1.0, 0.0), c(1.0, 0.0)).unwrap().re, 1.0, max_relative = 1e-14);
        assert_relative_eq!(beta(c(2.0, 0.0), c(3.0, 0.0)).unwrap().re, 1.0 / 12.0, max_relative = 1e-14);
        assert_relative_eq!(beta(c(0.5, 0.0), c(0.5, 0.0)).unwrap().re, PI, max_relative = 1e-14);
        // mpmath.beta(2.5+1j, 0.75-0.5j)
        let got = beta(c(2.5, 1.0), c(0.75, -0.5)).unwrap();
        assert!(close(got, c(0.310_295_023_158_961_2, 0.251_938_529_710_307_04), 1e-13));
        assert!(matches!(beta(c(0.0, 1.0), c(1.0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(beta(c(1.0, 0.0), c(-0.5, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn hahn_weight_examples() {
        let one = c(1.0, 0.0);
        assert_relative_eq!(hahn_weight(0.0, one, one, one, one).unwrap().re, 1.0, max_relative = 1e-14);
        let h = c(0.5, 0.0);
        for z in [0.0, 0.3, 1.0, 2.5, 7.0] {
            let want = PI * PI / (PI * z).cosh().powi(2);
            let got = hahn_weight(z, h, h, h, h).unwrap();
            assert!(close(got, c(want, 0.0), 1e-12), "z={z}: {got} vs {want}");
        }
    }

    #[test]
    fn hahn_weight_overflow_and_domain() {
        let big = c(150.0, 0.0);
        assert!(matches!(hahn_weight(0.0, big, big, big, big), Err(Error::Overflow(_))));
        let bad = c(-0.5, 0.0);
        assert!(matches!(hahn_weight(0.0, bad, c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn recurrence_on_complex_grid() {
        // 1000 points with |z| <= 20, Re z > 0.
        let mut worst: f64 = 0.0;
        for i in 0..40 {
            for j in 0..25 {
                let re = 0.05 + 14.0 * i as f64 / 39.0;
                let im = -14.0 + 28.0 * j as f64 / 24.0;
                let z = c(re, im);
                let lhs = log_gamma(z + 1.0).unwrap().as_log();
                let rhs = log_gamma(z).unwrap().as_log() + z.ln();
                let d = lhs - rhs;
                // relative error of Γ(z+1) vs zΓ(z) is |exp(d) - 1|
                let rel = (Complex64::new(d.re, principal_phase(d.im)).exp() - 1.0).norm();
                worst = worst.max(rel);
            }
        }
        assert!(worst < 1e-12, "worst recurrence error {worst:e}");
    }

    #[test]
    fn reflection_away_from_integers() {
        let mut worst: f64 = 0.0;
        for i in 0..30 {
            for j in 0..30 {
                let z = c(-6.3 + 0.41 * i as f64, -5.0 + 0.35 * j as f64);
                let g = gamma(z).unwrap() * gamma(Complex64::new(1.0, 0.0) - z).unwrap();
                let v = g * (z * PI).sin() / PI;
                worst = worst.max((v - 1.0).norm());
            }
        }
        assert!(worst < 1e-12, "worst reflection error {worst:e}");
    }

    #[test]
    fn pochhammer_is_gamma_ratio() {
        for a in [c(0.3, 0.7), c(-2.5, 0.1), c(4.0, -3.0), c(-0.75, 0.0)] {
            for k in 0..12 {
                let lhs = pochhammer(a, k);
                let rhs = gamma(a + k as f64).unwrap() / gamma(a).unwrap();
                assert!(close(lhs, rhs, 1e-12), "a={a} k={k}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn conjugate_pair_weight_is_real_positive() {
        let alpha = c(0.5, 0.25);
        let beta = c(0.75, -0.25);
        for k in 0..=80 {
            let z = -20.0 + 0.5 * k as f64;
            let w = hahn_weight(z, alpha, beta, alpha.conj(), beta.conj()).unwrap();
            assert!(w.re > 0.0);
            assert!(w.im.abs() <= 1e-12 * w.re.abs(), "z={z}: {w}");
        }
    }

    #[test]
    fn large_imaginary_reflection_is_finite() {
        let v = log_gamma(c(-0.25, 300.0)).unwrap();
        assert!(v.log_modulus.is_finite());
        let w = log_gamma(c(0.75, 300.0)).unwrap();
        // Γ(z+1) = zΓ(z) across the reflection boundary
        let d = w.as_log() - v.as_log() - c(-0.25, 300.0).ln();
        assert!(d.re.abs() < 1e-10 && principal_phase(d.im).abs() < 1e-10);
    }

    #[test]
    fn x_over_sin_limit() {
        assert_eq!(x_over_sin(c(0.0, 0.0)), c(1.0, 0.0));
        let x = c(1e-7, 0.0);
        assert!((x_over_sin(x) - 1.0).norm() < 1e-13);
        let y = c(0.3, 0.0);
        assert_relative_eq!(x_over_sin(y).re, 0.3 / 0.3f64.sin(), max_relative = 1e-15);
    }
}

//! Fourier and Mellin transforms of weighted Jacobi polynomials, and the
//! Parseval identity that carries Jacobi inner products over to gamma
//! weighted continuous Hahn inner products.
//!
//! Convention: `F(f)(z) = ∫ e^{−ixz} f(x) dx`, so that
//! `2π ∫ f ḡ = ∫ F(f) conj(F(g))`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::i_pow;
use crate::numerics::{
    exp_checked, log_gamma, log_gamma_sum, log_hahn_weight, log_tanh_weight, softplus,
};
use crate::polynomials::{
    chahn_abs_bound, chahn_eval, jacobi_abs_bound, jacobi_eval, HahnParams, JacobiParams,
};
use crate::quadrature::{integrate_line, integrate_line_oscillatory, QuadResult, QuadratureConfig};
use crate::report::{relative_error, CheckConfig, Comparison, VerificationReport, ROUNDING_FLOOR};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub(crate) fn require_positive_real_parts(what: &str, params: &[(&str, Complex64)]) -> Result<()> {
    for (name, p) in params {
        if p.re.is_nan() || p.re <= 0.0 {
            return Err(Error::Domain(format!("{what} needs Re({name}) > 0, got {p}")));
        }
    }
    Ok(())
}

/// Bound on `|(1−tanh x)^α (1+tanh x)^β|` given `Re α = ra > 0` and
/// `Re β = rb > 0`, from `1 − tanh x ≤ 2e^{−2x}` and `1 + tanh x ≤ 2`.
pub(crate) fn tanh_weight_envelope(x: f64, ra: f64, rb: f64) -> f64 {
    let scale = (ra + rb) * LN_2;
    if x >= 0.0 {
        (scale - 2.0 * ra * x).exp()
    } else {
        (scale + 2.0 * rb * x).exp()
    }
}

/// Quadrature of `∫ e^{−ixz} (1−tanh x)^α (1+tanh x)^β P_n^{(γ,δ)}(tanh x) dx`,
/// evaluated in the `x` variable.
pub fn fourier_transform_numeric(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    jacobi: &JacobiParams<Complex64>,
    z: f64,
    quad: &QuadratureConfig,
) -> Result<QuadResult> {
    require_positive_real_parts("fourier transform", &[("alpha", alpha), ("beta", beta)])?;
    let bound = jacobi_abs_bound(n, jacobi)?.at(1.0);
    let f = |x: f64| -> Result<Complex64> {
        let p = jacobi_eval(n, jacobi, c(x.tanh()))?;
        Ok((log_tanh_weight(x, alpha, beta) - Complex64::new(0.0, x * z)).exp() * p)
    };
    let env = |x: f64| bound * tanh_weight_envelope(x, alpha.re, beta.re);
    integrate_line_oscillatory(&f, &env, z, quad)
}

/// Closed form of the same transform:
/// `2^{α+β−1} Γ(α+iz/2)Γ(β−iz/2)/Γ(α+β+n) · i^{−n} p_n(z/2; α, δ−β+1, γ−α+1, β)`.
pub fn fourier_transform_closed(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    jacobi: &JacobiParams<Complex64>,
    z: f64,
) -> Result<Complex64> {
    let half = Complex64::new(0.0, 0.5 * z);
    let log = (alpha + beta - 1.0) * LN_2 + log_gamma_sum(&[alpha + half, beta - half])?
        - log_gamma(alpha + beta + n as f64)?.as_log();
    let hahn = HahnParams::from_jacobi_transform(&alpha, &beta, jacobi);
    Ok(exp_checked(log)? * i_pow::<Complex64>(-(n as i64)) * chahn_eval(n, &hahn, c(0.5 * z))?)
}

fn compare_fourier(
    cmp: &mut Comparison,
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    jacobi: &JacobiParams<Complex64>,
    z: f64,
    quad: &QuadratureConfig,
) -> Result<()> {
    let lhs = fourier_transform_numeric(n, alpha, beta, jacobi, z, quad)?;
    let rhs = fourier_transform_closed(n, alpha, beta, jacobi, z)?;
    let label = format!(
        "n={n} z={z} alpha={alpha} beta={beta} gamma={} delta={}",
        jacobi.gamma, jacobi.delta
    );
    cmp.check_scaled(&label, lhs.value, rhs, ROUNDING_FLOOR * lhs.l1_norm);
    cmp.add_diagnostics(lhs.diagnostics());
    Ok(())
}

/// Quadrature against closed form for the Fourier transform of one
/// weighted Jacobi polynomial.
pub fn fourier_pair_check(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    z: f64,
    cfg: &CheckConfig,
) -> VerificationReport {
    let name = "fourier_pair";
    let mut cmp = Comparison::new(name, cfg.rel_tol, 0.0);
    let jacobi = JacobiParams::new(gamma, delta);
    match compare_fourier(&mut cmp, n, alpha, beta, &jacobi, z, &cfg.quad) {
        Ok(()) => cmp.finish(),
        Err(e) => VerificationReport::from_error(name, &e),
    }
}

/// One weighted-Jacobi parameter tuple `(α, β, γ, δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
}

impl TransformParams {
    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64, delta: Complex64) -> Self {
        TransformParams {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    pub fn jacobi(&self) -> JacobiParams<Complex64> {
        JacobiParams::new(self.gamma, self.delta)
    }
}

/// Fourier pair over every combination of degree, frequency and parameter
/// tuple, folded into one report.
pub fn fourier_grid_check(
    max_n: usize,
    zs: &[f64],
    tuples: &[TransformParams],
    cfg: &CheckConfig,
) -> VerificationReport {
    let name = "fourier_pair_grid";
    let mut cmp = Comparison::new(name, cfg.rel_tol, 0.0);
    for t in tuples {
        for n in 0..=max_n {
            for &z in zs {
                if let Err(e) = compare_fourier(&mut cmp, n, t.alpha, t.beta, &t.jacobi(), z, &cfg.quad) {
                    return VerificationReport::from_error(name, &e);
                }
            }
        }
    }
    cmp.finish()
}

/// Quadrature of `∫₀^∞ x^α (1+x)^{−α−β} P_n^{(γ,δ)}((1−x)/(1+x)) x^{−iλ−1} dx`
/// after `x = e^{−2u}`. The integrand is built from `x` itself, not from the
/// tanh form of the Fourier integrand.
pub fn mellin_transform_numeric(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    jacobi: &JacobiParams<Complex64>,
    lambda: f64,
    quad: &QuadratureConfig,
) -> Result<QuadResult> {
    require_positive_real_parts("mellin transform", &[("alpha", alpha), ("beta", beta)])?;
    let bound = jacobi_abs_bound(n, jacobi)?.at(1.0);
    let f = |u: f64| -> Result<Complex64> {
        let ln_x = -2.0 * u;
        let ln_1px = softplus(ln_x);
        let ratio = if u >= 0.0 {
            -(ln_x.exp_m1()) / (1.0 + ln_x.exp())
        } else {
            (-ln_x).exp_m1() / (1.0 + (-ln_x).exp())
        };
        let p = jacobi_eval(n, jacobi, c(ratio))?;
        let log = (alpha - Complex64::new(0.0, lambda)) * ln_x - (alpha + beta) * ln_1px;
        Ok(2.0 * log.exp() * p)
    };
    let env = |u: f64| {
        let rate = if u >= 0.0 { alpha.re } else { beta.re };
        2.0 * bound * (-2.0 * rate * u.abs()).exp()
    };
    integrate_line_oscillatory(&f, &env, 2.0 * lambda, quad)
}

/// Closed-form Mellin transform
/// `Γ(α−iλ)Γ(β+σiλ)/Γ(α+β+n) · i^{−n} p_n(−λ; α, δ−β+1, γ−α+1, β)`, with
/// `σ = +1` for the convention that follows from the Fourier transform and
/// `σ = −1` for the commonly quoted one.
pub fn mellin_transform_closed(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    jacobi: &JacobiParams<Complex64>,
    lambda: f64,
    quoted_sign: bool,
) -> Result<Complex64> {
    let il = Complex64::new(0.0, lambda);
    let second = if quoted_sign { beta - il } else { beta + il };
    let log = log_gamma_sum(&[alpha - il, second])? - log_gamma(alpha + beta + n as f64)?.as_log();
    let hahn = HahnParams::from_jacobi_transform(&alpha, &beta, jacobi);
    Ok(exp_checked(log)? * i_pow::<Complex64>(-(n as i64)) * chahn_eval(n, &hahn, c(-lambda))?)
}


/// How often each gamma sign convention reproduced the quadrature, and its
/// worst relative error.
#[derive(Debug, Default)]
struct ConventionTally {
    total: usize,
    derived_hits: usize,
    quoted_hits: usize,
    derived_worst: f64,
    quoted_worst: f64,
}

fn compare_mellin(
    cmp: &mut Comparison,
    n: usize,
    p: &TransformParams,
    lambda: f64,
    quad: &QuadratureConfig,
    tally: &mut ConventionTally,
) -> Result<()> {
    let jacobi = p.jacobi();
    let lhs = mellin_transform_numeric(n, p.alpha, p.beta, &jacobi, lambda, quad)?;
    // x = e^{−2u} turns the Mellin integral into 2^{1−α−β} F(·)(−2λ)
    let route = exp_checked((1.0 - p.alpha - p.beta) * LN_2)?
        * fourier_transform_closed(n, p.alpha, p.beta, &jacobi, -2.0 * lambda)?;
    let label = format!("n={n} lambda={lambda} alpha={} beta={}", p.alpha, p.beta);
    let floor = ROUNDING_FLOOR * lhs.l1_norm;
    cmp.check_scaled(&label, lhs.value, route, floor);
    cmp.add_diagnostics(lhs.diagnostics());
    let derived = mellin_transform_closed(n, p.alpha, p.beta, &jacobi, lambda, false)?;
    let quoted = mellin_transform_closed(n, p.alpha, p.beta, &jacobi, lambda, true)?;
    let tol = cmp.rel_tol();
    let matches = |v: Complex64| (lhs.value - v).norm() <= (tol * v.norm()).max(floor);
    tally.total += 1;
    tally.derived_hits += usize::from(matches(derived));
    tally.quoted_hits += usize::from(matches(quoted));
    tally.derived_worst = tally.derived_worst.max(relative_error(lhs.value, derived, tol, floor));
    tally.quoted_worst = tally.quoted_worst.max(relative_error(lhs.value, quoted, tol, floor));
    Ok(())
}

fn mellin_report(
    name: &str,
    n_values: &[usize],
    params: &[TransformParams],
    lambdas: &[f64],
    cfg: &CheckConfig,
) -> VerificationReport {
    let mut cmp = Comparison::new(name, cfg.rel_tol, 0.0);
    let mut tally = ConventionTally::default();
    for p in params {
        for &n in n_values {
            for &lambda in lambdas {
                if let Err(e) = compare_mellin(&mut cmp, n, p, lambda, &cfg.quad, &mut tally) {
                    return VerificationReport::from_error(name, &e);
                }
            }
        }
    }
    let t = &tally;
    cmp.note(format!(
        "sign convention: Γ(α−iλ)Γ(β+iλ) matches {}/{} cases (worst rel err {:.3e}), \
         quoted Γ(α−iλ)Γ(β−iλ) matches {}/{} (worst rel err {:.3e})",
        t.derived_hits, t.total, t.derived_worst, t.quoted_hits, t.total, t.quoted_worst
    ));
    cmp.finish()
}

/// Mellin transform of one weighted Jacobi polynomial by quadrature,
/// checked against the Fourier route; the details record which gamma sign
/// convention reproduces the quadrature.
pub fn mellin_pair_check(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    lambda: f64,
    cfg: &CheckConfig,
) -> VerificationReport {
    mellin_report(
        "mellin_pair",
        &[n],
        &[TransformParams::new(alpha, beta, gamma, delta)],
        &[lambda],
        cfg,
    )
}

/// Mellin pair over a grid, one report.
pub fn mellin_grid_check(
    max_n: usize,
    lambdas: &[f64],
    tuples: &[TransformParams],
    cfg: &CheckConfig,
) -> VerificationReport {
    let ns: Vec<usize> = (0..=max_n).collect();
    mellin_report("mellin_pair_grid", &ns, tuples, lambdas, cfg)
}

/// Parameters of the Parseval identity: weights `(α, β)` and `(a, b)`,
/// Jacobi parameters `(γ, δ)` and `(c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParsevalParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl ParsevalParams {
    /// `γ = c = α+a−1`, `δ = d = β+b−1`: the left side becomes a Jacobi
    /// orthogonality integral.
    pub fn specialized(alpha: Complex64, beta: Complex64, a: Complex64, b: Complex64) -> Self {
        let gamma = alpha + a - 1.0;
        let delta = beta + b - 1.0;
        ParsevalParams {
            alpha,
            beta,
            a,
            b,
            gamma,
            delta,
            c: gamma,
            d: delta,
        }
    }

    pub fn is_specialized(&self) -> bool {
        let gamma = self.alpha + self.a - 1.0;
        let delta = self.beta + self.b - 1.0;
        self.gamma == gamma && self.c == gamma && self.delta == delta && self.d == delta
    }
}

/// Both sides of the Parseval identity, each by its own quadrature:
/// `2π ∫ (1−t)^{α+a}(1+t)^{β+b} P_n^{(γ,δ)}(t) P_m^{(c,d)}(t) dx` with
/// `t = tanh x`, and
/// `i^{m−n} 2^{α+a+β+b−2} ∫ Γ(α+iz/2)Γ(β−iz/2)Γ(a−iz/2)Γ(b+iz/2)
///  / (Γ(α+β+n)Γ(a+b+m)) · p_n(z/2; …) conj(p_m(z/2; …)) dz`.
pub fn parseval_sides(
    n: usize,
    m: usize,
    p: &ParsevalParams,
    quad: &QuadratureConfig,
) -> Result<(QuadResult, QuadResult)> {
    require_positive_real_parts(
        "parseval",
        &[("alpha", p.alpha), ("beta", p.beta), ("a", p.a), ("b", p.b)],
    )?;
    let jn = JacobiParams::new(p.gamma, p.delta);
    let jm = JacobiParams::new(p.c, p.d);
    let (ea, eb) = (p.alpha + p.a, p.beta + p.b);
    let bound_left = jacobi_abs_bound(n, &jn)?.at(1.0) * jacobi_abs_bound(m, &jm)?.at(1.0);
    let left_f = |x: f64| -> Result<Complex64> {
        let t = c(x.tanh());
        let w = log_tanh_weight(x, ea, eb).exp();
        Ok(2.0 * PI * w * jacobi_eval(n, &jn, t)? * jacobi_eval(m, &jm, t)?)
    };
    let left_env = |x: f64| 2.0 * PI * bound_left * tanh_weight_envelope(x, ea.re, eb.re);
    let left = integrate_line(&left_f, &left_env, quad)?;

    let hn = HahnParams::from_jacobi_transform(&p.alpha, &p.beta, &jn);
    let jm_conj = JacobiParams::new(p.c.conj(), p.d.conj());
    let hm = HahnParams::from_jacobi_transform(&p.a.conj(), &p.b.conj(), &jm_conj);
    let bn = chahn_abs_bound(n, &hn)?;
    let bm = chahn_abs_bound(m, &hm)?;
    let constant = (ea + eb - 2.0) * LN_2
        - log_gamma(p.alpha + p.beta + n as f64)?.as_log()
        - log_gamma(p.a + p.b + m as f64)?.as_log();
    let phase = i_pow::<Complex64>(m as i64 - n as i64);
    let log_weight = |z: f64| -> Result<Complex64> {
        Ok(constant + log_hahn_weight(0.5 * z, p.alpha, p.beta, p.a, p.b)?)
    };
    let right_f = |z: f64| -> Result<Complex64> {
        let w = log_weight(z)?.exp();
        let x = c(0.5 * z);
        Ok(phase * w * chahn_eval(n, &hn, x)? * chahn_eval(m, &hm, x)?.conj())
    };
    let right_env = |z: f64| match log_weight(z) {
        Ok(l) => l.re.exp() * bn.at(0.5 * z) * bm.at(0.5 * z),
        Err(_) => f64::INFINITY,
    };
    let right = integrate_line(&right_f, &right_env, quad)?;
    Ok((left, right))
}

/// Parseval identity for general parameters, each side by quadrature. For
/// the specialized parameters with `n ≠ m` both sides are also compared to
/// zero at the absolute tolerance.
pub fn parseval_check(n: usize, m: usize, p: &ParsevalParams, cfg: &CheckConfig) -> VerificationReport {
    let name = "parseval";
    let (left, right) = match parseval_sides(n, m, p, &cfg.quad) {
        Ok(v) => v,
        Err(e) => return VerificationReport::from_error(name, &e),
    };
    let mut cmp = Comparison::new(name, cfg.rel_tol, cfg.abs_tol);
    let floor = cfg.abs_tol.max(ROUNDING_FLOOR * left.l1_norm.max(right.l1_norm));
    cmp.check_scaled(&format!("n={n} m={m} sides"), right.value, left.value, floor);
    if n != m && p.is_specialized() {
        let zero = Complex64::new(0.0, 0.0);
        cmp.check(&format!("n={n} m={m} left vanishes"), left.value, zero);
        cmp.check(&format!("n={n} m={m} right vanishes"), right.value, zero);
    }
    cmp.note(format!("left {} right {}", left.value, right.value));
    cmp.add_diagnostics(left.diagnostics());
    cmp.add_diagnostics(right.diagnostics());
    cmp.finish()
}

//! Gram matrices and orthogonality checks: continuous Hahn polynomials
//! against the four-gamma weight (with Barnes' first lemma as the `0,0`
//! entry), Bateman and Pasternack polynomials against hyperbolic weights,
//! the Pasternack biorthogonality, and Jacobi polynomials on `[−1, 1]`.
//!
//! Closed-form right sides are never taken from quadrature. Entries whose
//! integrand is odd are set to zero without integrating.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{exp_checked, log_gamma, log_hahn_weight, log_tanh_weight, pochhammer, x_over_sin};
use crate::parallel::map_ordered;
use crate::polynomials::{
    chahn_abs_bound, chahn_eval, jacobi_abs_bound, jacobi_eval, pasternack_abs_bound, pasternack_eval,
    HahnParams, JacobiParams,
};
use crate::quadrature::{integrate_line, QuadResult, QuadratureConfig};
use crate::report::{CheckConfig, Comparison, QuadDiagnostics, VerificationReport};
use crate::transforms::{require_positive_real_parts, tanh_weight_envelope};

/// Largest Gram matrix computed in floating point.
pub const MAX_GRAM_SIZE: usize = 16;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// Squared norm of the continuous Hahn polynomial of degree `n`:
/// `Γ(α+β+n)Γ(a+b+n)Γ(n+α+a)Γ(n+β+b) / (n! (2n+s−1) Γ(n+s−1))` with
/// `s = α+β+a+b`. At `n = 0` the product `(s−1)Γ(s−1)` is taken as `Γ(s)`,
/// which removes the singularity at `s = 1`.
pub fn chahn_norm_rhs(
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    a: Complex64,
    b: Complex64,
) -> Result<Complex64> {
    require_positive_real_parts(
        "chahn_norm_rhs",
        &[("alpha", alpha), ("beta", beta), ("a", a), ("b", b)],
    )?;
    let nf = n as f64;
    let s = alpha + beta + a + b;
    let numer = log_gamma(alpha + beta + nf)?.as_log()
        + log_gamma(a + b + nf)?.as_log()
        + log_gamma(alpha + a + nf)?.as_log()
        + log_gamma(beta + b + nf)?.as_log();
    let denom = if n == 0 {
        log_gamma(s)?.as_log()
    } else {
        (s + 2.0 * nf - 1.0).ln() + log_gamma(s + nf - 1.0)?.as_log()
    };
    exp_checked(numer - denom - ln_factorial(n))
}

/// Four weight parameters of the continuous Hahn orthogonality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub a: Complex64,
    pub b: Complex64,
}

impl WeightParams {
    pub fn new(alpha: Complex64, beta: Complex64, a: Complex64, b: Complex64) -> Self {
        WeightParams { alpha, beta, a, b }
    }

    /// Parameters of the orthogonal family, `p_n(z; α, b, a, β)`.
    pub fn polynomial_params(&self) -> HahnParams<Complex64> {
        HahnParams::new(self.alpha, self.b, self.a, self.beta)
    }

    /// Relabeling `z → −z` exchanges `α ↔ b` and `β ↔ a`.
    pub fn swapped(&self) -> Self {
        WeightParams::new(self.b, self.a, self.beta, self.alpha)
    }

    /// The integrand `w p_n p_m` is odd in `z` when `n + m` is odd.
    pub fn has_parity(&self) -> bool {
        (self.alpha == self.a && self.beta == self.b) || (self.alpha == self.beta && self.a == self.b)
    }

    /// The weight is positive on ℝ.
    pub fn is_positive(&self) -> bool {
        (self.a == self.alpha.conj() && self.b == self.beta.conj())
            || (self.alpha == self.beta.conj() && self.a == self.b.conj())
    }

    fn validate(&self) -> Result<()> {
        require_positive_real_parts(
            "continuous Hahn weight",
            &[("alpha", self.alpha), ("beta", self.beta), ("a", self.a), ("b", self.b)],
        )
    }

    pub fn norm(&self, n: usize) -> Result<Complex64> {
        chahn_norm_rhs(n, self.alpha, self.beta, self.a, self.b)
    }
}

/// Both sides of a Gram matrix computation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramResult {
    /// `matrix[n][m]`, by quadrature.
    pub matrix: Vec<Vec<Complex64>>,
    /// Closed-form diagonal.
    pub expected_diagonal: Vec<Complex64>,
    /// Largest `|G_nm|`, `n ≠ m`.
    pub max_offdiag_abs: f64,
    /// Largest `|G_nm| / sqrt(|h_n h_m|)`, `n ≠ m`.
    pub max_offdiag_normalized: f64,
    pub max_diag_rel_err: f64,
    /// Entries set to zero by parity instead of integrated.
    pub parity_zeroed: usize,
    pub diagnostics: QuadDiagnostics,
}

impl GramResult {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    fn from_parts(
        matrix: Vec<Vec<Complex64>>,
        expected_diagonal: Vec<Complex64>,
        parity_zeroed: usize,
        diagnostics: QuadDiagnostics,
    ) -> Self {
        let mut max_offdiag_abs: f64 = 0.0;
        let mut max_offdiag_normalized: f64 = 0.0;
        let mut max_diag_rel_err: f64 = 0.0;
        for (n, row) in matrix.iter().enumerate() {
            for (m, v) in row.iter().enumerate() {
                if n == m {
                    let want = expected_diagonal[n];
                    max_diag_rel_err = max_diag_rel_err.max((v - want).norm() / want.norm());
                } else {
                    let scale = (expected_diagonal[n].norm() * expected_diagonal[m].norm()).sqrt();
                    max_offdiag_abs = max_offdiag_abs.max(v.norm());
                    max_offdiag_normalized = max_offdiag_normalized.max(v.norm() / scale);
                }
            }
        }
        GramResult {
            matrix,
            expected_diagonal,
            max_offdiag_abs,
            max_offdiag_normalized,
            max_diag_rel_err,
            parity_zeroed,
            diagnostics,
        }
    }

    /// CSV with a header row of column indices; each cell is `re+imi` in
    /// round-trip exponent notation.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["n\\m".to_string()];
        header.extend((0..self.size()).map(|m| m.to_string()));
        w.write_record(&header)?;
        for (n, row) in self.matrix.iter().enumerate() {
            let mut rec = vec![n.to_string()];
            rec.extend(row.iter().map(|v| format_complex(*v)));
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `re±imi` with both parts in shortest round-trip exponent notation.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:e}{sign}{:e}i", z.re, z.im.abs())
}

/// Upper-triangle assembly with parity skipping; entries run through
/// `map_ordered`, so the matrix is identical in sequential and parallel runs.
fn assemble<F>(size: usize, parity: bool, parallel: bool, entry: F) -> Result<(Vec<Vec<Complex64>>, usize, QuadDiagnostics)>
where
    F: Fn(usize, usize) -> Result<QuadResult> + Sync + Send,
{
    let mut pairs = Vec::new();
    let mut zeroed = 0;
    for n in 0..size {
        for m in n..size {
            if parity && (n + m) % 2 == 1 {
                zeroed += if n == m { 1 } else { 2 };
            } else {
                pairs.push((n, m));
            }
        }
    }
    let results = map_ordered(&pairs, parallel, |&(n, m)| entry(n, m));
    let mut matrix = vec![vec![Complex64::new(0.0, 0.0); size]; size];
    let mut diag = QuadDiagnostics::default();
    for (&(n, m), r) in pairs.iter().zip(results) {
        let r = r?;
        matrix[n][m] = r.value;
        matrix[m][n] = r.value;
        diag.merge(r.diagnostics());
    }
    Ok((matrix, zeroed, diag))
}

fn check_size(size: usize) -> Result<()> {
    if size == 0 || size > MAX_GRAM_SIZE {
        Err(Error::Domain(format!(
            "Gram size must be between 1 and {MAX_GRAM_SIZE}, got {size}"
        )))
    } else {
        Ok(())
    }
}

/// One continuous Hahn Gram entry
/// `(1/2π) ∫ Γ(α+iz)Γ(β−iz)Γ(a−iz)Γ(b+iz) p_n(z) p_m(z) dz`.
pub fn chahn_gram_entry(n: usize, m: usize, w: &WeightParams, quad: &QuadratureConfig) -> Result<QuadResult> {
    w.validate()?;
    let hp = w.polynomial_params();
    let bn = chahn_abs_bound(n, &hp)?;
    let bm = chahn_abs_bound(m, &hp)?;
    let ln_2pi = (2.0 * PI).ln();
    let log_weight = |z: f64| log_hahn_weight(z, w.alpha, w.beta, w.a, w.b).map(|l| l - ln_2pi);
    let f = |z: f64| -> Result<Complex64> {
        let x = c(z);
        Ok(log_weight(z)?.exp() * chahn_eval(n, &hp, x)? * chahn_eval(m, &hp, x)?)
    };
    let env = |z: f64| match log_weight(z) {
        Ok(l) => l.re.exp() * bn.at(z) * bm.at(z),
        Err(_) => f64::INFINITY,
    };
    integrate_line(&f, &env, quad)
}

/// Continuous Hahn Gram matrix of size `size` with its closed-form diagonal.
pub fn chahn_gram(size: usize, w: &WeightParams, quad: &QuadratureConfig) -> Result<GramResult> {
    check_size(size)?;
    w.validate()?;
    let expected = (0..size).map(|n| w.norm(n)).collect::<Result<Vec<_>>>()?;
    let (matrix, zeroed, diag) = assemble(size, w.has_parity(), quad.parallel, |n, m| {
        chahn_gram_entry(n, m, w, quad)
    })?;
    Ok(GramResult::from_parts(matrix, expected, zeroed, diag))
}

/// Judges a Gram matrix: diagonal against the closed form at `rel_tol`,
/// off-diagonal entries against zero at `abs_tol · sqrt(|h_n h_m|)` (or at
/// `abs_tol` itself when `normalize` is false).
fn judge_gram(name: &str, g: &GramResult, cfg: &CheckConfig, normalize: bool) -> Comparison {
    let mut cmp = Comparison::new(name, cfg.rel_tol, cfg.abs_tol);
    let zero = Complex64::new(0.0, 0.0);
    for n in 0..g.size() {
        for m in 0..g.size() {
            let v = g.matrix[n][m];
            if n == m {
                cmp.check_scaled(&format!("({n},{n})"), v, g.expected_diagonal[n], 0.0);
            } else if m > n {
                let floor = if normalize {
                    cfg.abs_tol * (g.expected_diagonal[n].norm() * g.expected_diagonal[m].norm()).sqrt()
                } else {
                    cfg.abs_tol
                };
                cmp.check_scaled(&format!("({n},{m})"), v, zero, floor);
            }
        }
    }
    cmp.note(format!(
        "size {}; max offdiag abs {:.3e}, normalized {:.3e}; max diag rel err {:.3e}; {} entries zero by parity",
        g.size(),
        g.max_offdiag_abs,
        g.max_offdiag_normalized,
        g.max_diag_rel_err,
        g.parity_zeroed
    ));
    cmp.add_diagnostics(g.diagnostics);
    cmp
}

/// Continuous Hahn orthogonality as a check. For a positive weight the
/// matrix must also be real with a positive diagonal.
pub fn chahn_gram_check(size: usize, w: &WeightParams, cfg: &CheckConfig) -> (Option<GramResult>, VerificationReport) {
    match chahn_gram(size, w, &cfg.quad) {
        Ok(g) => {
            let r = judge_chahn_gram(&g, w, cfg);
            (Some(g), r)
        }
        Err(e) => (None, VerificationReport::from_error("chahn_gram", &e)),
    }
}

/// Judges a computed continuous Hahn Gram matrix.
pub fn judge_chahn_gram(g: &GramResult, w: &WeightParams, cfg: &CheckConfig) -> VerificationReport {
    let mut cmp = judge_gram("chahn_gram", g, cfg, true);
    if w.is_positive() {
        for n in 0..g.size() {
            for m in 0..g.size() {
                let v = g.matrix[n][m];
                let scale = (g.expected_diagonal[n].norm() * g.expected_diagonal[m].norm()).sqrt();
                cmp.check_scaled(
                    &format!("imag({n},{m})"),
                    Complex64::new(v.im, 0.0),
                    Complex64::new(0.0, 0.0),
                    cfg.abs_tol * scale,
                );
            }
            if g.matrix[n][n].re.is_nan() || g.matrix[n][n].re <= 0.0 {
                cmp.check_scaled(&format!("positive({n},{n})"), g.matrix[n][n], c(f64::NAN), 0.0);
            }
        }
        cmp.note("positive weight: real symmetric with positive diagonal");
    }
    cmp.finish()
}

/// Barnes' first lemma, the `0,0` Gram entry, against the gamma closed form.
pub fn barnes_check(w: &WeightParams, cfg: &CheckConfig) -> VerificationReport {
    barnes_tuples("barnes", std::slice::from_ref(w), cfg)
}

fn barnes_tuples(name: &str, tuples: &[WeightParams], cfg: &CheckConfig) -> VerificationReport {
    let results = map_ordered(tuples, cfg.quad.parallel, |w| {
        Ok::<_, Error>((chahn_gram_entry(0, 0, w, &cfg.quad)?, w.norm(0)?))
    });
    let mut cmp = Comparison::new(name, cfg.rel_tol, 0.0);
    for (w, r) in tuples.iter().zip(results) {
        match r {
            Ok((q, want)) => {
                cmp.check_scaled(
                    &format!("alpha={} beta={} a={} b={}", w.alpha, w.beta, w.a, w.b),
                    q.value,
                    want,
                    0.0,
                );
                cmp.add_diagnostics(q.diagnostics());
            }
            Err(e) => return VerificationReport::from_error(name, &e),
        }
    }
    cmp.finish()
}

/// `count` tuples with real parts uniform in `[1/4, 2]` and imaginary parts
/// uniform in `[−1/2, 1/2]`, from a seeded ChaCha stream.
pub fn random_weight_params(count: usize, seed: u64) -> Vec<WeightParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || Complex64::new(rng.gen_range(0.25..=2.0), rng.gen_range(-0.5..=0.5));
    (0..count)
        .map(|_| {
            let (alpha, beta, a, b) = (draw(), draw(), draw(), draw());
            WeightParams::new(alpha, beta, a, b)
        })
        .collect()
}

/// Barnes' first lemma at seeded random parameters.
pub fn barnes_random_check(count: usize, seed: u64, cfg: &CheckConfig) -> VerificationReport {
    let mut r = barnes_tuples("barnes_random", &random_weight_params(count, seed), cfg);
    r.details = format!("seed {seed}; {}", r.details);
    r
}

/// The hyperbolic weights of the Bateman and Pasternack relations.
#[derive(Debug, Clone, Copy, PartialEq)]
enum HyperbolicWeight {
    /// `1/cosh²(πx/2)`
    SechSquared,
    /// `1/(cos πm + cosh πx)`
    Pasternack(Complex64),
}

impl HyperbolicWeight {
    fn at(&self, x: f64) -> Complex64 {
        let e = (-PI * x.abs()).exp();
        match *self {
            HyperbolicWeight::SechSquared => c(4.0 * e / ((1.0 + e) * (1.0 + e))),
            HyperbolicWeight::Pasternack(m) => {
                let cos = (m * PI).cos();
                2.0 * e / (1.0 + 2.0 * cos * e + e * e)
            }
        }
    }
}

/// Admissible Pasternack parameter: real in `(−1, 1)` or purely imaginary.
fn validate_m(m: Complex64) -> Result<()> {
    let real_ok = m.im == 0.0 && m.re > -1.0 && m.re < 1.0;
    let imag_ok = m.re == 0.0 && m.im.is_finite();
    if real_ok || imag_ok {
        return Ok(());
    }
    if m.im == 0.0 && m.re.fract() == 0.0 {
        return Err(Error::Domain(format!("Pasternack weight has a pole at integer m = {}", m.re)));
    }
    Err(Error::Domain(format!("Pasternack parameter must lie in (−1, 1) or iℝ, got {m}")))
}

/// `∫ F_n^{m1}(ix) F_p^{m2}(ix) w(x) dx`.
fn hyperbolic_entry(
    n: usize,
    p: usize,
    m1: Complex64,
    m2: Complex64,
    weight: HyperbolicWeight,
    quad: &QuadratureConfig,
) -> Result<QuadResult> {
    let bn = pasternack_abs_bound(n, m1)?;
    let bp = pasternack_abs_bound(p, m2)?;
    let f = |x: f64| -> Result<Complex64> {
        let ix = Complex64::new(0.0, x);
        Ok(weight.at(x) * pasternack_eval(n, m1, ix)? * pasternack_eval(p, m2, ix)?)
    };
    // for |x| ≥ 1 both weights are below 4e^{−π|x|}
    let env = |x: f64| 4.0 * (-PI * x.abs()).exp() * bn.at(x) * bp.at(x);
    integrate_line(&f, &env, quad)
}

fn hyperbolic_gram(
    size: usize,
    m1: Complex64,
    m2: Complex64,
    weight: HyperbolicWeight,
    expected: Vec<Complex64>,
    quad: &QuadratureConfig,
) -> Result<GramResult> {
    let (matrix, zeroed, diag) = assemble(size, true, quad.parallel, |n, p| {
        hyperbolic_entry(n, p, m1, m2, weight, quad)
    })?;
    Ok(GramResult::from_parts(matrix, expected, zeroed, diag))
}

fn sign(n: usize) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `4(−1)^n/(π(2n+1))`
pub fn bateman_norm(n: usize) -> f64 {
    4.0 * sign(n) / (PI * (2 * n + 1) as f64)
}

/// `((−1)^n/(2n+1)) (2/π) ((1−m)_n/(1+m)_n) (mπ/sin πm)`
pub fn pasternack_norm(n: usize, m: Complex64) -> Complex64 {
    let one = c(1.0);
    (sign(n) / (2 * n + 1) as f64) * (2.0 / PI) * pochhammer(one - m, n) / pochhammer(one + m, n)
        * x_over_sin(m * PI)
}

/// `2(−1)^n/(π(2n+1)) (mπ/sin πm)`
pub fn pasternack_biortho_norm(n: usize, m: Complex64) -> Complex64 {
    2.0 * sign(n) / (PI * (2 * n + 1) as f64) * x_over_sin(m * PI)
}

fn gram_report(name: &str, size: usize, built: Result<GramResult>, cfg: &CheckConfig) -> (Option<GramResult>, VerificationReport) {
    match built.and_then(|g| {
        check_size(size)?;
        Ok(g)
    }) {
        Ok(g) => {
            let r = judge_gram(name, &g, cfg, false).finish();
            (Some(g), r)
        }
        Err(e) => (None, VerificationReport::from_error(name, &e)),
    }
}

/// Bateman Gram matrix `∫ F_n(ix)F_m(ix)/cosh²(πx/2) dx`, `n, m ≤ max_n`.
pub fn bateman_gram_check(max_n: usize, cfg: &CheckConfig) -> (Option<GramResult>, VerificationReport) {
    let size = max_n + 1;
    let expected = (0..size).map(|n| c(bateman_norm(n))).collect();
    let built = check_size(size)
        .and_then(|_| hyperbolic_gram(size, c(0.0), c(0.0), HyperbolicWeight::SechSquared, expected, &cfg.quad));
    gram_report("bateman_gram", size, built, cfg)
}

fn single_entry(name: &str, got: Result<QuadResult>, want: Complex64, diagonal: bool, cfg: &CheckConfig) -> VerificationReport {
    match got {
        Ok(q) => {
            let mut cmp = Comparison::new(name, cfg.rel_tol, cfg.abs_tol);
            if diagonal {
                cmp.check_scaled("entry", q.value, want, 0.0);
            } else {
                cmp.check("entry", q.value, Complex64::new(0.0, 0.0));
            }
            cmp.add_diagnostics(q.diagnostics());
            cmp.finish()
        }
        Err(e) => VerificationReport::from_error(name, &e),
    }
}

/// Largest degree accepted by the single-entry Pasternack checks.
pub const MAX_PASTERNACK_DEGREE: usize = 10;

fn pasternack_pre(n: usize, p: usize, m: Complex64, real_only: bool) -> Result<()> {
    if n > MAX_PASTERNACK_DEGREE || p > MAX_PASTERNACK_DEGREE {
        return Err(Error::Domain(format!(
            "Pasternack checks support n, p ≤ {MAX_PASTERNACK_DEGREE}"
        )));
    }
    if real_only && m.im != 0.0 {
        return Err(Error::Domain(format!("biorthogonality needs real m, got {m}")));
    }
    validate_m(m)
}

fn parity_zero(name: &str) -> VerificationReport {
    VerificationReport::pass(name, "odd integrand: zero by parity")
}

/// One entry of the Bateman orthogonality.
pub fn bateman_ortho_check(n: usize, m: usize, cfg: &CheckConfig) -> VerificationReport {
    let name = "bateman_ortho";
    if n > 12 || m > 12 {
        return VerificationReport::from_error(name, &Error::Domain("Bateman check supports n, m ≤ 12".into()));
    }
    if (n + m) % 2 == 1 {
        return parity_zero(name);
    }
    let q = hyperbolic_entry(n, m, c(0.0), c(0.0), HyperbolicWeight::SechSquared, &cfg.quad);
    single_entry(name, q, c(bateman_norm(n)), n == m, cfg)
}

/// One entry of the Pasternack orthogonality.
pub fn pasternack_ortho_check(n: usize, p: usize, m: Complex64, cfg: &CheckConfig) -> VerificationReport {
    let name = "pasternack_ortho";
    if let Err(e) = pasternack_pre(n, p, m, false) {
        return VerificationReport::from_error(name, &e);
    }
    if (n + p) % 2 == 1 {
        return parity_zero(name);
    }
    let q = hyperbolic_entry(n, p, m, m, HyperbolicWeight::Pasternack(m), &cfg.quad);
    single_entry(name, q, pasternack_norm(n, m), n == p, cfg)
}

/// One entry of the Pasternack biorthogonality, `F_n^m` against `F_p^{−m}`.
pub fn pasternack_biortho_check(n: usize, p: usize, m: Complex64, cfg: &CheckConfig) -> VerificationReport {
    let name = "pasternack_biortho";
    if let Err(e) = pasternack_pre(n, p, m, true) {
        return VerificationReport::from_error(name, &e);
    }
    if (n + p) % 2 == 1 {
        return parity_zero(name);
    }
    let q = hyperbolic_entry(n, p, m, -m, HyperbolicWeight::Pasternack(m), &cfg.quad);
    single_entry(name, q, pasternack_biortho_norm(n, m), n == p, cfg)
}

/// Pasternack Gram matrix for `n, p ≤ max_n`.
pub fn pasternack_gram_check(max_n: usize, m: Complex64, cfg: &CheckConfig) -> (Option<GramResult>, VerificationReport) {
    let size = max_n + 1;
    let built = check_size(size).and_then(|_| validate_m(m)).and_then(|_| {
        let expected = (0..size).map(|n| pasternack_norm(n, m)).collect();
        hyperbolic_gram(size, m, m, HyperbolicWeight::Pasternack(m), expected, &cfg.quad)
    });
    let (g, mut r) = gram_report("pasternack_gram", size, built, cfg);
    r.details = format!("m={m}; {}", r.details);
    (g, r)
}

/// Pasternack biorthogonality Gram matrix for `n, p ≤ max_n`. The details
/// report the measured diagonal constants, normalized by the closed-form
/// right side, and compare them with the orthogonality constants carried over by
/// `(1+m)_n F_n^m = (1−m)_n F_n^{−m}`.
pub fn pasternack_biortho_gram_check(
    max_n: usize,
    m: Complex64,
    cfg: &CheckConfig,
) -> (Option<GramResult>, VerificationReport) {
    let name = "pasternack_biortho_gram";
    let size = max_n + 1;
    let built = check_size(size).and_then(|_| validate_m(m)).and_then(|_| {
        let expected = (0..size).map(|n| pasternack_biortho_norm(n, m)).collect();
        hyperbolic_gram(size, m, -m, HyperbolicWeight::Pasternack(m), expected, &cfg.quad)
    });
    let g = match built {
        Ok(g) => g,
        Err(e) => return (None, VerificationReport::from_error(name, &e)),
    };
    let mut cmp = judge_gram(name, &g, cfg, false);
    let one = c(1.0);
    let mut worst: f64 = 0.0;
    let mut constants = Vec::new();
    for n in 0..size {
        let reflected = pochhammer(one + m, n) / pochhammer(one - m, n) * pasternack_norm(n, m);
        cmp.check_scaled(&format!("reflected({n})"), g.matrix[n][n], reflected, 0.0);
        let ratio = g.matrix[n][n] / g.expected_diagonal[n];
        worst = worst.max((ratio - 1.0).norm());
        if n < 3 {
            constants.push(format!("{:.12}", ratio.re));
        }
    }
    cmp.note(format!(
        "m={m}; measured/closed-form diagonal constant: first [{}], worst |ratio−1| {worst:.3e}",
        constants.join(", ")
    ));
    (Some(g), cmp.finish())
}

/// The Pasternack norm and the continuous Hahn norm at
/// `α = β = (1+m)/2, a = b = (1−m)/2` agree after `z = x/2` and
/// `F_n^m(ix) = p_n(x/2)/(iⁿ(1+m)_n)`:
/// `h_n = (π/2)(−1)^n ((1+m)_n)² · pasternack_norm(n, m)`.
pub fn pasternack_hahn_consistency_check(max_n: usize, m: Complex64, cfg: &CheckConfig) -> VerificationReport {
    let name = "pasternack_hahn_consistency";
    if let Err(e) = validate_m(m) {
        return VerificationReport::from_error(name, &e);
    }
    let one = c(1.0);
    let w = WeightParams::new((one + m) / 2.0, (one + m) / 2.0, (one - m) / 2.0, (one - m) / 2.0);
    let mut cmp = Comparison::new(name, cfg.rel_tol, 0.0);
    let mut ratios = Vec::new();
    for n in 0..=max_n {
        let hahn = match w.norm(n) {
            Ok(v) => v,
            Err(e) => return VerificationReport::from_error(name, &e),
        };
        let poch = pochhammer(one + m, n);
        let pasternack = PI / 2.0 * sign(n) * poch * poch * pasternack_norm(n, m);
        cmp.check_scaled(&format!("n={n}"), hahn, pasternack, 0.0);
        if n < 3 {
            ratios.push(format!("{:.15}", (hahn / pasternack).re));
        }
    }
    cmp.note(format!("m={m}; ratios [{}]", ratios.join(", ")));
    cmp.finish()
}

/// `∫₋₁¹ (1−x)^α (1+x)^β P_n P_m dx` through `x = tanh u`.
pub fn jacobi_ortho_entry(
    n: usize,
    m: usize,
    alpha: Complex64,
    beta: Complex64,
    quad: &QuadratureConfig,
) -> Result<QuadResult> {
    if !(alpha.re > -1.0 && beta.re > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi orthogonality needs Re α, Re β > −1, got {alpha}, {beta}"
        )));
    }
    let jp = JacobiParams::new(alpha, beta);
    let bound = jacobi_abs_bound(n, &jp)?.at(1.0) * jacobi_abs_bound(m, &jp)?.at(1.0);
    let (ea, eb) = (alpha + 1.0, beta + 1.0);
    let f = |u: f64| -> Result<Complex64> {
        let t = c(u.tanh());
        Ok(log_tanh_weight(u, ea, eb).exp() * jacobi_eval(n, &jp, t)? * jacobi_eval(m, &jp, t)?)
    };
    let env = |u: f64| bound * tanh_weight_envelope(u, ea.re, eb.re);
    integrate_line(&f, &env, quad)
}

/// `2^{α+β+1}/(2n+α+β+1) · Γ(n+α+1)Γ(n+β+1)/(n! Γ(n+α+β+1))`, with
/// `(α+β+1)Γ(α+β+1)` taken as `Γ(α+β+2)` at `n = 0`.
pub fn jacobi_norm(n: usize, alpha: Complex64, beta: Complex64) -> Result<Complex64> {
    let nf = n as f64;
    let s = alpha + beta;
    let denom = if n == 0 {
        log_gamma(s + 2.0)?.as_log()
    } else {
        (s + 2.0 * nf + 1.0).ln() + log_gamma(s + nf + 1.0)?.as_log()
    };
    let log = (s + 1.0) * std::f64::consts::LN_2 + log_gamma(alpha + nf + 1.0)?.as_log()
        + log_gamma(beta + nf + 1.0)?.as_log()
        - denom
        - ln_factorial(n);
    exp_checked(log)
}

/// One entry of the Jacobi orthogonality.
pub fn jacobi_ortho_check(n: usize, m: usize, alpha: Complex64, beta: Complex64, cfg: &CheckConfig) -> VerificationReport {
    let name = "jacobi_ortho";
    let want = match jacobi_norm(n.max(m), alpha, beta) {
        Ok(v) => v,
        Err(e) => return VerificationReport::from_error(name, &e),
    };
    let q = jacobi_ortho_entry(n, m, alpha, beta, &cfg.quad);
    if n == m {
        return single_entry(name, q, want, true, cfg);
    }
    match (q, jacobi_norm(n.min(m), alpha, beta)) {
        (Ok(q), Ok(other)) => {
            let mut cmp = Comparison::new(name, cfg.rel_tol, cfg.abs_tol);
            let floor = cfg.abs_tol * (want.norm() * other.norm()).sqrt();
            cmp.check_scaled("entry", q.value, Complex64::new(0.0, 0.0), floor);
            cmp.add_diagnostics(q.diagnostics());
            cmp.finish()
        }
        (Err(e), _) | (_, Err(e)) => VerificationReport::from_error(name, &e),
    }
}

/// Jacobi Gram matrix for degrees `≤ max_n`.
pub fn jacobi_gram_check(
    max_n: usize,
    alpha: Complex64,
    beta: Complex64,
    cfg: &CheckConfig,
) -> (Option<GramResult>, VerificationReport) {
    let name = "jacobi_gram";
    let size = max_n + 1;
    let built = check_size(size).and_then(|_| {
        let expected = (0..size).map(|n| jacobi_norm(n, alpha, beta)).collect::<Result<Vec<_>>>()?;
        let (matrix, zeroed, diag) = assemble(size, alpha == beta, cfg.quad.parallel, |n, m| {
            jacobi_ortho_entry(n, m, alpha, beta, &cfg.quad)
        })?;
        Ok(GramResult::from_parts(matrix, expected, zeroed, diag))
    });
    match built {
        Ok(g) => {
            let mut r = judge_gram(name, &g, cfg, true).finish();
            r.details = format!("alpha={alpha} beta={beta}; {}", r.details);
            (Some(g), r)
        }
        Err(e) => (None, VerificationReport::from_error(name, &e)),
    }
}

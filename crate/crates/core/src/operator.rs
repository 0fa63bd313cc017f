//! Exact calculus on functions `x ↦ (1−tanh x)^α (1+tanh x)^β · q(tanh x)`.
//!
//! With `t = tanh x` we have `dt/dx = 1 − t²` and the weight
//! `w = (1−t)^α (1+t)^β` has logarithmic derivative `(β−α) − (α+β)t`, so the
//! class is closed under `d/dx` and differentiation acts on `q` alone:
//!
//! ```text
//! d/dx [w·q(t)] = w · [((β−α) − (α+β)t)·q(t) + (1 − t²)·q'(t)]
//! ```
//!
//! A polynomial in `d/dx` is applied as a linear combination of iterated
//! derivatives; `d/dx` does not commute with multiplication by `t`, so there
//! is no Horner shortcut.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{gaussian_to_string, i_pow, rising, ExactPoly, GaussianRational, Poly, Scalar};
use crate::polynomials::{
    chahn_coeffs_exact, jacobi_coeffs_exact, pasternack_coeffs_exact, HahnParams, JacobiParams,
};
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedTanhFunction {
    pub alpha: GaussianRational,
    pub beta: GaussianRational,
    /// Polynomial in `t = tanh x`.
    pub poly: ExactPoly,
}

impl WeightedTanhFunction {
    pub fn new(alpha: GaussianRational, beta: GaussianRational, poly: ExactPoly) -> Self {
        WeightedTanhFunction { alpha, beta, poly }
    }

    /// The bare weight `w`, i.e. `q = 1`.
    pub fn weight(alpha: GaussianRational, beta: GaussianRational) -> Self {
        WeightedTanhFunction::new(alpha, beta, Poly::one())
    }

    fn with_poly(&self, poly: ExactPoly) -> Self {
        WeightedTanhFunction {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            poly,
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.with_poly(self.poly.scale(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.alpha == other.alpha && self.beta == other.beta);
        self.with_poly(&self.poly + &other.poly)
    }
}

fn log_derivative(alpha: &GaussianRational, beta: &GaussianRational) -> ExactPoly {
    Poly::linear(
        beta.clone() - alpha.clone(),
        -(alpha.clone() + beta.clone()),
    )
}

fn one_minus_t_squared() -> ExactPoly {
    Poly::new(vec![
        GaussianRational::one(),
        GaussianRational::zero(),
        -GaussianRational::one(),
    ])
}

pub fn d_dx(f: &WeightedTanhFunction) -> WeightedTanhFunction {
    let lhs = &log_derivative(&f.alpha, &f.beta) * &f.poly;
    let rhs = &one_minus_t_squared() * &f.poly.derivative();
    f.with_poly(&lhs + &rhs)
}

/// `Σ_j c_j (d/dx)^j f` for `op = Σ_j c_j y^j`.
pub fn apply_operator(op: &ExactPoly, f: &WeightedTanhFunction) -> WeightedTanhFunction {
    let mut acc = f.with_poly(Poly::zero());
    let mut deriv = f.clone();
    for (j, c) in op.coeffs().iter().enumerate() {
        if j > 0 {
            deriv = d_dx(&deriv);
        }
        if !c.is_zero() {
            acc = acc.add(&deriv.scale(c));
        }
    }
    acc
}

/// `(α + ½ d/dx)_r` applied to the weight, compared against
/// `2^{−r} (1−t)^r (α+β)_r · w`.
fn shifted_operator_residual(
    alpha: &GaussianRational,
    beta: &GaussianRational,
    r: usize,
    derivative: impl Fn(&WeightedTanhFunction) -> WeightedTanhFunction,
) -> Option<String> {
    let half = crate::exact::rational(1, 2);
    let mut f = WeightedTanhFunction::weight(alpha.clone(), beta.clone());
    for j in 0..r {
        let shift = alpha.clone() + GaussianRational::from_int(j as i64);
        f = f.scale(&shift).add(&derivative(&f).scale(&half));
    }
    let one_minus_t_half = Poly::linear(half.clone(), -half);
    let mut expected = Poly::constant(rising(&(alpha.clone() + beta.clone()), r));
    for _ in 0..r {
        expected = &expected * &one_minus_t_half;
    }
    let diff = &f.poly - &expected;
    (!diff.is_zero()).then(|| format!("residual in t: {diff}"))
}

/// Derivative under the alternative log-derivative `(α+β) + (α−β)t`.
fn alternative_d_dx(f: &WeightedTanhFunction) -> WeightedTanhFunction {
    let alt = Poly::linear(
        f.alpha.clone() + f.beta.clone(),
        f.alpha.clone() - f.beta.clone(),
    );
    f.with_poly(&(&alt * &f.poly) + &(&one_minus_t_squared() * &f.poly.derivative()))
}

pub fn shifted_operator_identity_check(
    alpha: &GaussianRational,
    beta: &GaussianRational,
    r: usize,
) -> VerificationReport {
    let name = format!(
        "shifted_operator r={r} alpha={} beta={}",
        gaussian_to_string(alpha),
        gaussian_to_string(beta)
    );
    if r > 32 {
        return VerificationReport::from_error(
            name,
            &Error::Domain(format!("r = {r} exceeds 32")),
        );
    }
    let residual = shifted_operator_residual(alpha, beta, r, d_dx);
    let alt_holds = shifted_operator_residual(alpha, beta, r, alternative_d_dx).is_none();
    let note = format!(
        "weight log-derivative used: (beta-alpha) - (alpha+beta)*tanh x; \
         alternative form (alpha+beta) + (alpha-beta)*tanh x {} the identity here",
        if alt_holds { "also satisfies" } else { "does not satisfy" }
    );
    VerificationReport::exact(name, residual, &note)
}

fn require_positive(name: &str, v: &GaussianRational) -> Result<()> {
    if v.re > num_rational::BigRational::zero() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must have positive real part, got {}", gaussian_to_string(v))))
    }
}

/// Residual of
/// `p_n(−(i/2) d/dx; α, δ−β+1, γ−α+1, β) w = iⁿ (α+β)_n · w · P_n^{(γ,δ)}(tanh x)`.
pub fn hahn_operator_residual(
    n: usize,
    alpha: &GaussianRational,
    beta: &GaussianRational,
    jacobi: &JacobiParams<GaussianRational>,
) -> Result<Option<String>> {
    require_positive("alpha", alpha)?;
    require_positive("beta", beta)?;
    let hahn = HahnParams::from_jacobi_transform(alpha, beta, jacobi);
    let scale = GaussianRational::new(
        num_rational::BigRational::zero(),
        -num_rational::BigRational::new(1.into(), 2.into()),
    );
    let op = chahn_coeffs_exact(n, &hahn)?.rescale_argument(&scale);
    let lhs = apply_operator(&op, &WeightedTanhFunction::weight(alpha.clone(), beta.clone()));
    let factor = i_pow::<GaussianRational>(n as i64) * rising(&(alpha.clone() + beta.clone()), n);
    let rhs = jacobi_coeffs_exact(n, jacobi)?.scale(&factor);
    let diff = &lhs.poly - &rhs;
    Ok((!diff.is_zero()).then(|| format!("residual in t: {diff}")))
}

pub fn hahn_operator_identity_check(
    n: usize,
    alpha: &GaussianRational,
    beta: &GaussianRational,
    gamma: &GaussianRational,
    delta: &GaussianRational,
) -> VerificationReport {
    let name = format!(
        "hahn_operator n={n} alpha={} beta={} gamma={} delta={}",
        gaussian_to_string(alpha),
        gaussian_to_string(beta),
        gaussian_to_string(gamma),
        gaussian_to_string(delta)
    );
    let jacobi = JacobiParams::new(gamma.clone(), delta.clone());
    match hahn_operator_residual(n, alpha, beta, &jacobi) {
        Ok(r) => VerificationReport::exact(name, r, "exact operator identity"),
        Err(e) => VerificationReport::from_error(name, &e),
    }
}

/// `F_n^m(d/dx) cosh^{−m−1} x = cosh^{−m−1} x · P_n(tanh x)`; `m = 0` is Bateman's case.
pub fn pasternack_operator_check(n: usize, m: &GaussianRational) -> VerificationReport {
    let name = format!("pasternack_operator n={n} m={}", gaussian_to_string(m));
    let run = || -> Result<Option<String>> {
        let half_power = (GaussianRational::one() + m.clone()) / GaussianRational::from_int(2);
        let op = pasternack_coeffs_exact(n, m)?;
        let w = WeightedTanhFunction::weight(half_power.clone(), half_power);
        let lhs = apply_operator(&op, &w);
        let legendre = JacobiParams::new(GaussianRational::zero(), GaussianRational::zero());
        let diff = &lhs.poly - &jacobi_coeffs_exact(n, &legendre)?;
        Ok((!diff.is_zero()).then(|| format!("residual in t: {diff}")))
    };
    match run() {
        Ok(r) => VerificationReport::exact(name, r, "exact operator identity"),
        Err(e) => VerificationReport::from_error(name, &e),
    }
}

/// Coefficients `(A_n, B_n, C_n)` of `x·p_n = A_n p_{n+1} + B_n p_n + C_n p_{n−1}`,
/// found by expanding `x·p_n` in the basis `p_0, …, p_{n+1}`. Fails if any
/// basis coefficient below `n−1` is nonzero.
pub fn derive_recurrence(
    n: usize,
    params: &HahnParams<GaussianRational>,
) -> Result<(GaussianRational, GaussianRational, GaussianRational)> {
    if n == 0 {
        return Err(Error::Domain("derive_recurrence needs n >= 1".into()));
    }
    let basis = (0..=n + 1)
        .map(|k| chahn_coeffs_exact(k, params))
        .collect::<Result<Vec<_>>>()?;
    let mut rest = &Poly::x() * &basis[n];
    let mut coeffs = vec![GaussianRational::zero(); n + 2];
    for k in (0..=n + 1).rev() {
        let lc = basis[k]
            .leading()
            .filter(|_| basis[k].degree() == Some(k))
            .ok_or_else(|| Error::Domain(format!("p_{k} does not have degree {k}")))?;
        let c = rest.coeff(k) / lc.clone();
        rest = &rest - &basis[k].scale(&c);
        coeffs[k] = c;
    }
    debug_assert!(rest.is_zero());
    if let Some((index, value)) = coeffs[..n - 1]
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
    {
        return Err(Error::RecurrenceStructure {
            index,
            value: gaussian_to_string(value),
        });
    }
    Ok((
        coeffs[n + 1].clone(),
        coeffs[n].clone(),
        coeffs[n - 1].clone(),
    ))
}

pub fn recurrence_check(n: usize, params: &HahnParams<GaussianRational>) -> VerificationReport {
    let name = format!(
        "recurrence n={n} params=({}, {}, {}, {})",
        gaussian_to_string(&params.a),
        gaussian_to_string(&params.b),
        gaussian_to_string(&params.c),
        gaussian_to_string(&params.d)
    );
    let run = || -> Result<VerificationReport> {
        let (a, b, c) = derive_recurrence(n, params)?;
        let lc_n = chahn_coeffs_exact(n, params)?.leading().cloned().unwrap_or_default();
        let lc_next = chahn_coeffs_exact(n + 1, params)?.leading().cloned().unwrap_or_default();
        let residual = (a != lc_n / lc_next).then(|| "A_n differs from lc(p_n)/lc(p_{n+1})".to_string());
        let details = format!(
            "A={} B={} C={}; lower basis coefficients vanish",
            gaussian_to_string(&a),
            gaussian_to_string(&b),
            gaussian_to_string(&c)
        );
        Ok(VerificationReport::exact(&name, residual, &details))
    };
    run().unwrap_or_else(|e| VerificationReport::from_error(&name, &e))
}

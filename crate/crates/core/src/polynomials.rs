//! Jacobi, continuous Hahn, Bateman and Pasternack polynomials.
//!
//! Every family is a terminating hypergeometric series. Values and
//! coefficient vectors are both produced by accumulating the term ratio
//! `t_{k+1}/t_k`, never through gamma quotients, so a vanishing denominator
//! Pochhammer symbol is detected exactly where it occurs.
//!
//! Polynomials are stored in their natural argument: `x` for `P_n(x)` and for
//! `p_n(x; a, b, c, d)`. Rescalings such as `z/2` are left to callers.

use num_complex::Complex64;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{
    factorial, i_pow, rising, widen, ComplexDD, ExactPoly, GaussianRational, Poly, Scalar,
};
use crate::report::VerificationReport;

/// Largest degree accepted by the exact constructors.
pub const EXACT_DEGREE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiParams<S> {
    pub gamma: S,
    pub delta: S,
}

impl<S: Scalar> JacobiParams<S> {
    pub fn new(gamma: S, delta: S) -> Self {
        JacobiParams { gamma, delta }
    }
}

/// Parameters `(a, b, c, d)` of `p_n(x; a, b, c, d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HahnParams<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> HahnParams<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        HahnParams { a, b, c, d }
    }

    /// `a + b + c + d`
    pub fn sum(&self) -> S {
        self.a.clone() + self.b.clone() + self.c.clone() + self.d.clone()
    }

    /// The parameters `(α, δ−β+1, γ−α+1, β)` that a Jacobi polynomial
    /// `P_n^{(γ,δ)}` under the weight `(1−tanh x)^α (1+tanh x)^β` maps to.
    pub fn from_jacobi_transform(alpha: &S, beta: &S, jacobi: &JacobiParams<S>) -> Self {
        let one = S::one();
        HahnParams {
            a: alpha.clone(),
            b: jacobi.delta.clone() - beta.clone() + one.clone(),
            c: jacobi.gamma.clone() - alpha.clone() + one,
            d: beta.clone(),
        }
    }
}

fn pole(family: &'static str, term: usize) -> Error {
    Error::ParameterPole { family, term }
}

/// Scalar coefficients `t_k` (k = 0..=n) of
/// `Σ (−n)_k (num)_k / ((den)_k k!) · z^k`, with `z` folded in by the caller.
fn hyper_terms<S: Scalar>(
    family: &'static str,
    n: usize,
    numer: &[S],
    denom: &[S],
) -> Result<Vec<S>> {
    let mut terms = Vec::with_capacity(n + 1);
    let mut t = S::one();
    terms.push(t.clone());
    for k in 0..n {
        let kk = S::from_int(k as i64);
        let mut num = S::from_int(k as i64 - n as i64);
        for a in numer {
            num = num * (a.clone() + kk.clone());
        }
        let mut den = S::from_int(k as i64 + 1);
        for b in denom {
            den = den * (b.clone() + kk.clone());
        }
        if den.is_zero() {
            return Err(pole(family, k + 1));
        }
        t = t * num / den;
        terms.push(t.clone());
    }
    Ok(terms)
}

fn check_cap(n: usize) -> Result<()> {
    if n > EXACT_DEGREE_CAP {
        Err(Error::DegreeCap {
            requested: n,
            cap: EXACT_DEGREE_CAP,
        })
    } else {
        Ok(())
    }
}

fn jacobi_prefactor<S: Scalar>(n: usize, p: &JacobiParams<S>) -> S {
    rising(&(p.gamma.clone() + S::one()), n) / factorial::<S>(n)
}

fn jacobi_terms<S: Scalar>(n: usize, p: &JacobiParams<S>) -> Result<Vec<S>> {
    let top = p.gamma.clone() + p.delta.clone() + S::from_int(n as i64 + 1);
    hyper_terms("jacobi", n, &[top], &[p.gamma.clone() + S::one()])
}

/// `P_n^{(γ,δ)}(x) = ((γ+1)_n/n!) ₂F₁(−n, n+γ+δ+1; γ+1; (1−x)/2)`, term by term.
pub fn jacobi_value<S: Scalar>(n: usize, p: &JacobiParams<S>, x: &S) -> Result<S> {
    let u = (S::one() - x.clone()) / S::from_int(2);
    let terms = jacobi_terms(n, p)?;
    let mut sum = S::zero();
    let mut pow = S::one();
    for t in terms {
        sum = sum + t * pow.clone();
        pow = pow * u.clone();
    }
    Ok(jacobi_prefactor(n, p) * sum)
}

/// Coefficients of `P_n^{(γ,δ)}` in `x`.
pub fn jacobi_poly<S: Scalar>(n: usize, p: &JacobiParams<S>) -> Result<Poly<S>> {
    let terms = jacobi_terms(n, p)?;
    let half = S::one() / S::from_int(2);
    let u = Poly::linear(half.clone(), -half);
    let mut acc = Poly::zero();
    for t in terms.into_iter().rev() {
        acc = &(&acc * &u) + &Poly::constant(t);
    }
    Ok(acc.scale(&jacobi_prefactor(n, p)))
}

/// Floating `P_n^{(γ,δ)}(x)`; the series is summed in double-double.
pub fn jacobi_eval(n: usize, p: &JacobiParams<Complex64>, x: Complex64) -> Result<Complex64> {
    let wide = JacobiParams::new(widen(p.gamma), widen(p.delta));
    jacobi_value::<ComplexDD>(n, &wide, &widen(x)).map(|v| v.to_complex64())
}

/// Absolute-coefficient majorant `r ↦ Σ |c_k| r^k` of a floating
/// polynomial: an upper bound on `|q(x)|` for `|x| ≤ r`.
#[derive(Debug, Clone, PartialEq)]
pub struct AbsBound(Vec<f64>);

impl AbsBound {
    pub fn of<S: Scalar>(p: &Poly<S>) -> Self {
        AbsBound(p.coeffs().iter().map(|c| c.to_complex64().norm()).collect())
    }

    pub fn at(&self, r: f64) -> f64 {
        let r = r.abs();
        self.0.iter().rev().fold(0.0, |acc, c| acc * r + c)
    }
}

pub fn jacobi_abs_bound(n: usize, p: &JacobiParams<Complex64>) -> Result<AbsBound> {
    let wide = JacobiParams::new(widen(p.gamma), widen(p.delta));
    Ok(AbsBound::of(&jacobi_poly::<ComplexDD>(n, &wide)?))
}

pub fn chahn_abs_bound(n: usize, p: &HahnParams<Complex64>) -> Result<AbsBound> {
    let wide = HahnParams::new(widen(p.a), widen(p.b), widen(p.c), widen(p.d));
    Ok(AbsBound::of(&chahn_poly::<ComplexDD>(n, &wide)?))
}

pub fn pasternack_abs_bound(n: usize, m: Complex64) -> Result<AbsBound> {
    Ok(AbsBound::of(&pasternack_poly::<ComplexDD>(n, &widen(m))?))
}

pub fn jacobi_coeffs_exact(n: usize, p: &JacobiParams<GaussianRational>) -> Result<ExactPoly> {
    check_cap(n)?;
    jacobi_poly(n, p)
}

fn chahn_terms<S: Scalar>(n: usize, p: &HahnParams<S>) -> Result<Vec<S>> {
    let top = p.sum() + S::from_int(n as i64 - 1);
    hyper_terms(
        "continuous hahn",
        n,
        &[top],
        &[p.a.clone() + p.c.clone(), p.a.clone() + p.d.clone()],
    )
}

fn chahn_prefactor<S: Scalar>(n: usize, p: &HahnParams<S>) -> S {
    i_pow::<S>(n as i64)
        * rising(&(p.a.clone() + p.c.clone()), n)
        * rising(&(p.a.clone() + p.d.clone()), n)
        / factorial::<S>(n)
}

/// `p_n(x; a,b,c,d) = iⁿ ((a+c)_n (a+d)_n / n!) ₃F₂(−n, n+a+b+c+d−1, a+ix; a+c, a+d; 1)`.
pub fn chahn_value<S: Scalar>(n: usize, p: &HahnParams<S>, x: &S) -> Result<S> {
    let terms = chahn_terms(n, p)?;
    let shift = p.a.clone() + S::imag_unit() * x.clone();
    let mut sum = S::zero();
    let mut poch = S::one();
    for (k, t) in terms.into_iter().enumerate() {
        sum = sum + t * poch.clone();
        poch = poch * (shift.clone() + S::from_int(k as i64));
    }
    Ok(chahn_prefactor(n, p) * sum)
}

/// Coefficients of `p_n(x; a,b,c,d)` in `x`.
pub fn chahn_poly<S: Scalar>(n: usize, p: &HahnParams<S>) -> Result<Poly<S>> {
    let terms = chahn_terms(n, p)?;
    let mut acc = Poly::zero();
    let mut poch = Poly::one();
    for (k, t) in terms.into_iter().enumerate() {
        acc = &acc + &poch.scale(&t);
        let factor = Poly::linear(p.a.clone() + S::from_int(k as i64), S::imag_unit());
        poch = &poch * &factor;
    }
    Ok(acc.scale(&chahn_prefactor(n, p)))
}

/// Floating `p_n(x; a,b,c,d)`; the series is summed in double-double.
pub fn chahn_eval(n: usize, p: &HahnParams<Complex64>, x: Complex64) -> Result<Complex64> {
    let wide = HahnParams::new(widen(p.a), widen(p.b), widen(p.c), widen(p.d));
    chahn_value::<ComplexDD>(n, &wide, &widen(x)).map(|v| v.to_complex64())
}

pub fn chahn_coeffs_exact(n: usize, p: &HahnParams<GaussianRational>) -> Result<ExactPoly> {
    check_cap(n)?;
    chahn_poly(n, p)
}

/// `(n+a+b+c+d−1)_n / n!`, the leading coefficient of `p_n`.
pub fn chahn_leading_coefficient<S: Scalar>(n: usize, p: &HahnParams<S>) -> S {
    rising(&(p.sum() + S::from_int(n as i64 - 1)), n) / factorial::<S>(n)
}

fn pasternack_terms<S: Scalar>(n: usize, m: &S) -> Result<Vec<S>> {
    hyper_terms(
        "pasternack",
        n,
        &[S::from_int(n as i64 + 1)],
        &[S::one(), m.clone() + S::one()],
    )
}

/// `F_n^m(x) = ₃F₂(−n, n+1, (1+m+x)/2; 1, m+1; 1)`; `m = 0` is Bateman's `F_n`.
pub fn pasternack_value<S: Scalar>(n: usize, m: &S, x: &S) -> Result<S> {
    let terms = pasternack_terms(n, m)?;
    let shift = (S::one() + m.clone() + x.clone()) / S::from_int(2);
    let mut sum = S::zero();
    let mut poch = S::one();
    for (k, t) in terms.into_iter().enumerate() {
        sum = sum + t * poch.clone();
        poch = poch * (shift.clone() + S::from_int(k as i64));
    }
    Ok(sum)
}

pub fn pasternack_poly<S: Scalar>(n: usize, m: &S) -> Result<Poly<S>> {
    let terms = pasternack_terms(n, m)?;
    let half = S::one() / S::from_int(2);
    let base = (S::one() + m.clone()) / S::from_int(2);
    let mut acc = Poly::zero();
    let mut poch = Poly::one();
    for (k, t) in terms.into_iter().enumerate() {
        acc = &acc + &poch.scale(&t);
        let factor = Poly::linear(base.clone() + S::from_int(k as i64), half.clone());
        poch = &poch * &factor;
    }
    Ok(acc)
}

/// Floating `F_n^m(x)`; the series is summed in double-double.
pub fn pasternack_eval(n: usize, m: Complex64, x: Complex64) -> Result<Complex64> {
    pasternack_value::<ComplexDD>(n, &widen(m), &widen(x)).map(|v| v.to_complex64())
}

pub fn bateman_eval(n: usize, x: Complex64) -> Result<Complex64> {
    pasternack_eval(n, Complex64::new(0.0, 0.0), x)
}

pub fn pasternack_coeffs_exact(n: usize, m: &GaussianRational) -> Result<ExactPoly> {
    check_cap(n)?;
    pasternack_poly(n, m)
}

/// Checks `(1+m)_n F_n^m(x) = (1−m)_n F_n^{−m}(x)` as an exact polynomial identity.
pub fn pasternack_reflection_check(n: usize, m: &GaussianRational) -> VerificationReport {
    let name = format!("pasternack_reflection n={n} m={}", crate::exact::gaussian_to_string(m));
    let run = || -> Result<Option<String>> {
        let one = GaussianRational::one();
        let lhs = pasternack_coeffs_exact(n, m)?.scale(&rising(&(one.clone() + m.clone()), n));
        let neg = -m.clone();
        let rhs = pasternack_coeffs_exact(n, &neg)?.scale(&rising(&(one - m.clone()), n));
        let diff = &lhs - &rhs;
        Ok((!diff.is_zero()).then(|| format!("residual polynomial {diff}")))
    };
    match run() {
        Ok(residual) => VerificationReport::exact(name, residual, "exact polynomial identity"),
        Err(e) => VerificationReport::from_error(name, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gaussian, rational};
    use num_traits::Zero;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// Brute-force oracle: the defining sums with every Pochhammer symbol
    /// recomputed from scratch and exact rational arithmetic.
    fn jacobi_oracle(n: usize, g: &GaussianRational, d: &GaussianRational, x: &GaussianRational) -> GaussianRational {
        let one = GaussianRational::one();
        let u = (one.clone() - x.clone()) / rational(2, 1);
        let mut sum = GaussianRational::zero();
        for k in 0..=n {
            let mut term = rising(&rational(-(n as i64), 1), k)
                * rising(&(g.clone() + d.clone() + rational(n as i64 + 1, 1)), k)
                / (rising(&(g.clone() + one.clone()), k) * factorial::<GaussianRational>(k));
            for _ in 0..k {
                term *= u.clone();
            }
            sum += term;
        }
        rising(&(g.clone() + one), n) / factorial::<GaussianRational>(n) * sum
    }

    fn chahn_oracle(n: usize, p: &HahnParams<GaussianRational>, x: &GaussianRational) -> GaussianRational {
        let i = GaussianRational::imag_unit();
        let mut sum = GaussianRational::zero();
        for k in 0..=n {
            sum += rising(&rational(-(n as i64), 1), k)
                    * rising(&(p.sum() + rational(n as i64 - 1, 1)), k)
                    * rising(&(p.a.clone() + i.clone() * x.clone()), k)
                    / (rising(&(p.a.clone() + p.c.clone()), k)
                        * rising(&(p.a.clone() + p.d.clone()), k)
                        * factorial::<GaussianRational>(k));
        }
        i_pow::<GaussianRational>(n as i64)
            * rising(&(p.a.clone() + p.c.clone()), n)
            * rising(&(p.a.clone() + p.d.clone()), n)
            / factorial::<GaussianRational>(n)
            * sum
    }

    #[test]
    fn jacobi_examples() {
        let p = JacobiParams::new(c(0.3), c(1.7));
        let want = crate::numerics::pochhammer(c(1.3), 5) / 120.0;
        assert!((jacobi_eval(5, &p, c(1.0)).unwrap() - want).norm() < 1e-13);
        let legendre = JacobiParams::new(c(0.0), c(0.0));
        assert_eq!(jacobi_eval(2, &legendre, c(0.0)).unwrap(), c(-0.5));
        for x in [-0.7, 0.2, 3.0] {
            let got = jacobi_eval(1, &p, c(x)).unwrap();
            let want = 1.3 - (0.3 + 1.7 + 2.0) * (1.0 - x) / 2.0;
            assert!((got - c(want)).norm() < 1e-14);
        }
    }

    #[test]
    fn jacobi_exact_examples() {
        let zero = JacobiParams::new(rational(0, 1), rational(0, 1));
        assert_eq!(jacobi_coeffs_exact(0, &zero).unwrap(), Poly::one());
        assert_eq!(jacobi_coeffs_exact(1, &zero).unwrap(), Poly::x());
        let p = JacobiParams::new(rational(1, 3), rational(3, 4));
        for n in 0..10 {
            let poly = jacobi_coeffs_exact(n, &p).unwrap();
            assert_eq!(poly.degree(), Some(n));
            let at_one = rising(&rational(4, 3), n) / factorial::<GaussianRational>(n);
            assert_eq!(poly.eval(&rational(1, 1)), at_one);
            for x in [rational(-2, 5), rational(7, 3), gaussian(1, 2, -1, 3)] {
                assert_eq!(poly.eval(&x), jacobi_oracle(n, &p.gamma, &p.delta, &x));
                assert_eq!(jacobi_value(n, &p, &x).unwrap(), poly.eval(&x));
            }
        }
    }

    #[test]
    fn jacobi_pole_and_cap() {
        let p = JacobiParams::new(rational(-2, 1), rational(0, 1));
        assert!(matches!(jacobi_coeffs_exact(3, &p), Err(Error::ParameterPole { family: "jacobi", .. })));
        // −γ = 2 > n = 1: no denominator vanishes
        assert!(jacobi_coeffs_exact(1, &p).is_ok());
        let q = JacobiParams::new(rational(0, 1), rational(0, 1));
        assert!(matches!(jacobi_coeffs_exact(65, &q), Err(Error::DegreeCap { .. })));
        assert!(jacobi_coeffs_exact(64, &q).is_ok());
        let pf = JacobiParams::new(c(-1.0), c(0.5));
        assert!(matches!(jacobi_eval(2, &pf, c(0.1)), Err(Error::ParameterPole { .. })));
    }

    #[test]
    fn chahn_examples() {
        let h = HahnParams::new(c(0.5), c(0.5), c(0.5), c(0.5));
        assert_eq!(chahn_eval(0, &h, c(3.3)).unwrap(), c(1.0));
        for x in [-1.5, 0.0, 0.25, 4.0] {
            assert!((chahn_eval(1, &h, c(x)).unwrap() - c(2.0 * x)).norm() < 1e-14);
        }
        let he = HahnParams::new(rational(1, 2), rational(1, 2), rational(1, 2), rational(1, 2));
        assert_eq!(chahn_coeffs_exact(0, &he).unwrap(), Poly::one());
        assert_eq!(chahn_coeffs_exact(1, &he).unwrap(), Poly::new(vec![rational(0, 1), rational(2, 1)]));
        assert_eq!(chahn_coeffs_exact(2, &he).unwrap().leading().unwrap(), &rational(6, 1));
    }

    #[test]
    fn chahn_exact_matches_oracle_and_leading_coefficient() {
        let grid = [
            HahnParams::new(rational(1, 2), rational(1, 3), rational(1, 2), rational(1, 3)),
            HahnParams::new(gaussian(1, 2, 1, 4), gaussian(3, 4, 1, 4), gaussian(1, 2, -1, 4), gaussian(3, 4, -1, 4)),
            HahnParams::new(rational(2, 1), rational(1, 4), rational(7, 5), rational(3, 1)),
            HahnParams::new(gaussian(1, 1, 2, 1), rational(1, 2), gaussian(-1, 3, 1, 1), rational(5, 2)),
        ];
        for p in &grid {
            for n in 0..9 {
                let poly = chahn_coeffs_exact(n, p).unwrap();
                assert_eq!(poly.degree(), Some(n));
                assert_eq!(poly.leading().unwrap(), &chahn_leading_coefficient(n, p));
                for x in [rational(0, 1), rational(-3, 2), gaussian(2, 3, 1, 5)] {
                    assert_eq!(poly.eval(&x), chahn_oracle(n, p, &x));
                    assert_eq!(chahn_value(n, p, &x).unwrap(), poly.eval(&x));
                }
            }
        }
    }

    #[test]
    fn chahn_leading_coefficient_real_for_real_sum() {
        let p = HahnParams::new(gaussian(1, 2, 1, 3), gaussian(1, 3, -1, 2), gaussian(2, 1, 1, 6), rational(1, 1));
        assert!(p.sum().im.is_zero());
        for n in 0..8 {
            let lc = chahn_coeffs_exact(n, &p).unwrap().leading().unwrap().clone();
            assert!(lc.im.is_zero(), "n={n}: {lc}");
        }
    }

    #[test]
    fn rotated_chahn_is_real_for_real_parameters() {
        // i^{-n} p_n(z; α, b, a, β) is a real polynomial in iz for real
        // parameters. In z itself the odd coefficients are imaginary.
        let (al, be, a, b) = (rational(3, 4), rational(5, 4), rational(1, 3), rational(2, 1));
        let p = HahnParams::new(al, b, a, be);
        let minus_i = -GaussianRational::imag_unit();
        for n in 0..12 {
            let q = chahn_coeffs_exact(n, &p).unwrap().scale(&i_pow(-(n as i64)));
            let in_iz = q.rescale_argument(&minus_i);
            assert!(in_iz.coeffs().iter().all(|c| c.im.is_zero()), "n={n}");
            if n >= 1 {
                assert!(!q.coeff(1).im.is_zero(), "n={n}");
            }
        }
    }

    #[test]
    fn chahn_pole() {
        // a + c = -1: (a+c)_k vanishes at k = 2
        let p = HahnParams::new(rational(1, 2), rational(1, 2), rational(-3, 2), rational(1, 2));
        assert!(matches!(chahn_coeffs_exact(3, &p), Err(Error::ParameterPole { .. })));
        assert!(chahn_coeffs_exact(1, &p).is_ok());
    }

    #[test]
    fn pasternack_examples() {
        let m = c(0.37);
        assert_eq!(pasternack_eval(0, m, c(2.0)).unwrap(), c(1.0));
        for x in [-1.0, 0.5, 2.0] {
            assert!((bateman_eval(1, c(x)).unwrap() - c(-x)).norm() < 1e-15);
            assert!((pasternack_eval(1, m, c(x)).unwrap() - c(-x / 1.37)).norm() < 1e-15);
        }
        assert!(matches!(pasternack_eval(3, c(-2.0), c(0.0)), Err(Error::ParameterPole { .. })));
        let exact = pasternack_coeffs_exact(1, &rational(1, 2)).unwrap();
        assert_eq!(exact.eval(&rational(1, 1)), rational(-2, 3));
    }

    #[test]
    fn pasternack_is_specialized_chahn() {
        // F_n^m(x) = p_n(−ix/2; (1+m)/2, (1−m)/2, (1−m)/2, (1+m)/2) / (iⁿ (m+1)_n)
        for m in [rational(0, 1), rational(1, 3), rational(-1, 2), gaussian(0, 1, 2, 1)] {
            let one = GaussianRational::one();
            let half = rational(1, 2);
            let ap = (one.clone() + m.clone()) * half.clone();
            let am = (one.clone() - m.clone()) * half.clone();
            let h = HahnParams::new(ap.clone(), am.clone(), am, ap);
            let scale = GaussianRational::new(num_rational::BigRational::zero(), -num_rational::BigRational::new(1.into(), 2.into()));
            for n in 0..8 {
                let lhs = pasternack_coeffs_exact(n, &m).unwrap();
                let norm = i_pow::<GaussianRational>(n as i64) * rising(&(m.clone() + one.clone()), n);
                let rhs = chahn_coeffs_exact(n, &h).unwrap().rescale_argument(&scale).scale(&(one.clone() / norm));
                assert_eq!(lhs, rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn reflection_check_examples() {
        assert!(pasternack_reflection_check(5, &rational(0, 1)).passed());
        for m in [rational(1, 4), rational(1, 3), rational(1, 2), rational(2, 3)] {
            for n in 0..=12 {
                let r = pasternack_reflection_check(n, &m);
                assert!(r.passed(), "{}: {}", r.name, r.details);
            }
        }
        // (1+m)F_1^m = −x for n = 1
        let m = rational(2, 7);
        let lhs = pasternack_coeffs_exact(1, &m).unwrap().scale(&(rational(1, 1) + m.clone()));
        assert_eq!(lhs, Poly::new(vec![rational(0, 1), rational(-1, 1)]));
        // m = 1 makes (1−m)_n F^{−1}_n hit the pole of (m+1)_k
        let r = pasternack_reflection_check(2, &rational(1, 1));
        assert_eq!(r.status, crate::report::Status::Error);
    }

    #[test]
    fn float_matches_exact_on_grid() {
        // n <= 20, rational parameters in [1/4, 4], |x| <= 10
        let params = [(1, 4), (1, 2), (3, 2), (4, 1), (7, 3)];
        let xs = [(-10, 1), (-7, 3), (0, 1), (1, 2), (9, 1)];
        let mut worst: f64 = 0.0;
        for (i, &(p, q)) in params.iter().enumerate() {
            let (p2, q2) = params[(i + 2) % params.len()];
            let je = JacobiParams::new(rational(p, q), rational(p2, q2));
            let jf = JacobiParams::new(c(p as f64 / q as f64), c(p2 as f64 / q2 as f64));
            let (p3, q3) = params[(i + 1) % params.len()];
            let he = HahnParams::new(rational(p, q), rational(p2, q2), rational(p3, q3), rational(p, q));
            let hf = HahnParams::new(
                c(p as f64 / q as f64),
                c(p2 as f64 / q2 as f64),
                c(p3 as f64 / q3 as f64),
                c(p as f64 / q as f64),
            );
            for n in [0, 1, 5, 12, 20] {
                let jp = jacobi_coeffs_exact(n, &je).unwrap();
                let hp = chahn_coeffs_exact(n, &he).unwrap();
                for &(xn, xd) in &xs {
                    let xe = rational(xn, xd);
                    let xf = c(xn as f64 / xd as f64);
                    let want = jp.eval(&xe).to_complex64();
                    let got = jacobi_eval(n, &jf, xf).unwrap();
                    worst = worst.max((got - want).norm() / want.norm().max(1e-300));
                    let want = hp.eval(&xe).to_complex64();
                    let got = chahn_eval(n, &hf, xf).unwrap();
                    worst = worst.max((got - want).norm() / want.norm().max(1e-300));
                }
            }
        }
        assert!(worst < 1e-11, "worst float/exact disagreement {worst:e}");
    }
}

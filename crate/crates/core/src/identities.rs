//! Exact checks of the generating functions, contiguous relations and
//! classical Jacobi identities.
//!
//! Generating functions are compared coefficient by coefficient as
//! truncated series in `t` at fixed rational sample points. Polynomial
//! identities are compared as exact polynomials. Any nonzero residual is a
//! failure that names the offending coefficient.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{gaussian_to_string, i_pow, rising, ExactPoly, GaussianRational, Poly, Scalar};
use crate::polynomials::{chahn_coeffs_exact, chahn_value, jacobi_coeffs_exact, jacobi_value, HahnParams, JacobiParams};
use crate::report::VerificationReport;
use crate::series::FormalSeries;

/// Largest truncation order accepted by the generating-function checks.
pub const MAX_SERIES_ORDER: usize = 40;
/// Largest degree accepted by the polynomial identity checks.
pub const MAX_IDENTITY_DEGREE: usize = 40;

fn q(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn half() -> GaussianRational {
    GaussianRational::one() / q(2)
}

fn s(v: &GaussianRational) -> String {
    gaussian_to_string(v)
}

fn which_error(which: u8) -> Error {
    Error::Domain(format!("identity selector must be 1 or 2, got {which}"))
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_SERIES_ORDER {
        Err(Error::Domain(format!("order {order} exceeds {MAX_SERIES_ORDER}")))
    } else {
        Ok(())
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_IDENTITY_DEGREE {
        Err(Error::Domain(format!("degree {n} exceeds {MAX_IDENTITY_DEGREE}")))
    } else {
        Ok(())
    }
}

fn nonzero(name: &str, v: GaussianRational) -> Result<GaussianRational> {
    if v.is_zero() {
        Err(Error::Domain(format!("{name} vanishes")))
    } else {
        Ok(v)
    }
}

fn series_residual(lhs: &FormalSeries, rhs: &FormalSeries) -> Option<String> {
    lhs.first_difference(rhs)
        .map(|(k, d)| format!("coefficient of t^{k} differs by {}", s(&d)))
}

fn poly_residual(lhs: &ExactPoly, rhs: &ExactPoly) -> Option<String> {
    let d = lhs - rhs;
    (!d.is_zero()).then(|| format!("residual {d}"))
}

/// `2(x−1)t/(1−t)²` and friends: `c·t·(1−t)^{−2}`.
fn t_over_one_minus_t_squared(c: GaussianRational, order: usize) -> FormalSeries {
    FormalSeries::monomial(c, order).mul(&FormalSeries::one_minus_t_pow(&q(-2), order))
}

/// Both sides of a Jacobi generating function at `x`.
///
/// 1: `(1−t)^{−γ−δ−1} ₂F₁((γ+δ+1)/2, (γ+δ+2)/2; γ+1; 2(x−1)t/(1−t)²)`
///    against `Σ (γ+δ+1)_n/(γ+1)_n · P_n(x) tⁿ`.
/// 2: `₀F₁(; γ+1; (x−1)t/2) · ₀F₁(; δ+1; (x+1)t/2)`
///    against `Σ P_n(x) tⁿ / ((γ+1)_n (δ+1)_n)`.
pub fn jacobi_generating_sides(
    which: u8,
    gamma: &GaussianRational,
    delta: &GaussianRational,
    x: &GaussianRational,
    order: usize,
) -> Result<(FormalSeries, FormalSeries)> {
    check_order(order)?;
    let one = GaussianRational::one();
    let jp = JacobiParams::new(gamma.clone(), delta.clone());
    let p = |n: usize| jacobi_value(n, &jp, x);
    let g1 = gamma.clone() + one.clone();
    let d1 = delta.clone() + one.clone();
    match which {
        1 => {
            let sum = gamma.clone() + delta.clone() + one.clone();
            let arg = t_over_one_minus_t_squared(q(2) * (x.clone() - one.clone()), order);
            let f = FormalSeries::hypergeometric(
                &[sum.clone() * half(), (sum.clone() + one) * half()],
                std::slice::from_ref(&g1),
                &arg,
            )?;
            let lhs = FormalSeries::one_minus_t_pow(&-sum.clone(), order).mul(&f);
            let coeffs = (0..=order)
                .map(|n| Ok(rising(&sum, n) / nonzero("(γ+1)_n", rising(&g1, n))? * p(n)?))
                .collect::<Result<Vec<_>>>()?;
            Ok((lhs, FormalSeries::new(coeffs)))
        }
        2 => {
            let a1 = FormalSeries::monomial((x.clone() - one.clone()) * half(), order);
            let a2 = FormalSeries::monomial((x.clone() + one) * half(), order);
            let lhs = FormalSeries::hypergeometric(&[], std::slice::from_ref(&g1), &a1)?
                .mul(&FormalSeries::hypergeometric(&[], std::slice::from_ref(&d1), &a2)?);
            let coeffs = (0..=order)
                .map(|n| Ok(p(n)? / nonzero("(γ+1)_n(δ+1)_n", rising(&g1, n) * rising(&d1, n))?))
                .collect::<Result<Vec<_>>>()?;
            Ok((lhs, FormalSeries::new(coeffs)))
        }
        w => Err(which_error(w)),
    }
}

pub fn genfun_jacobi_check(
    which: u8,
    gamma: &GaussianRational,
    delta: &GaussianRational,
    x: &GaussianRational,
    order: usize,
) -> VerificationReport {
    let name = format!(
        "genfun_jacobi{which} gamma={} delta={} x={} order={order}",
        s(gamma),
        s(delta),
        s(x)
    );
    match jacobi_generating_sides(which, gamma, delta, x, order) {
        Ok((lhs, rhs)) => VerificationReport::exact(name, series_residual(&lhs, &rhs), "exact series match"),
        Err(e) => VerificationReport::from_error(name, &e),
    }
}

/// Parameters `(α, β, γ, δ)` of the continuous Hahn generating functions,
/// which expand `p_n(z; α, δ, γ, β)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub alpha: GaussianRational,
    pub beta: GaussianRational,
    pub gamma: GaussianRational,
    pub delta: GaussianRational,
}

impl GenParams {
    pub fn new(alpha: GaussianRational, beta: GaussianRational, gamma: GaussianRational, delta: GaussianRational) -> Self {
        GenParams { alpha, beta, gamma, delta }
    }

    fn hahn(&self) -> HahnParams<GaussianRational> {
        HahnParams::new(self.alpha.clone(), self.delta.clone(), self.gamma.clone(), self.beta.clone())
    }

    fn sum(&self) -> GaussianRational {
        self.alpha.clone() + self.beta.clone() + self.gamma.clone() + self.delta.clone()
    }

    fn label(&self) -> String {
        format!(
            "alpha={} beta={} gamma={} delta={}",
            s(&self.alpha),
            s(&self.beta),
            s(&self.gamma),
            s(&self.delta)
        )
    }
}

/// The prefactor exponent in the first continuous Hahn generating function
/// in its commonly quoted form; the identity holds with `1 − s` instead.
fn quoted_exponent(p: &GenParams) -> GaussianRational {
    -p.sum() - GaussianRational::one()
}

fn chahn_first_sides(
    p: &GenParams,
    z: &GaussianRational,
    order: usize,
    exponent: &GaussianRational,
) -> Result<(FormalSeries, FormalSeries)> {
    let one = GaussianRational::one();
    let i = GaussianRational::imag_unit();
    let sm = p.sum();
    let ab = p.alpha.clone() + p.beta.clone();
    let ag = p.alpha.clone() + p.gamma.clone();
    let arg = t_over_one_minus_t_squared(q(-4), order);
    let f = FormalSeries::hypergeometric(
        &[
            (sm.clone() - one.clone()) * half(),
            sm.clone() * half(),
            p.alpha.clone() + i * z.clone(),
        ],
        &[ag.clone(), ab.clone()],
        &arg,
    )?;
    let lhs = FormalSeries::one_minus_t_pow(exponent, order).mul(&f);
    let hp = p.hahn();
    let coeffs = (0..=order)
        .map(|n| {
            let norm = nonzero("(α+β)_n(α+γ)_n", rising(&ab, n) * rising(&ag, n))?;
            Ok(rising(&(sm.clone() - one.clone()), n) / norm
                * i_pow::<GaussianRational>(-(n as i64))
                * chahn_value(n, &hp, z)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((lhs, FormalSeries::new(coeffs)))
}

/// Both sides of a continuous Hahn generating function at `z`.
///
/// 1: `(1−t)^{1−s} ₃F₂((s−1)/2, s/2, α+iz; α+γ, α+β; −4t/(1−t)²)` with
///    `s = α+β+γ+δ`, against `Σ (s−1)_n/((α+β)_n(α+γ)_n) (t/i)ⁿ p_n(z)`.
/// 2: `Σ (t/i)ⁿ p_n(z) / ((α+γ)_n (β+δ)_n (α+β)_n)` against the double sum
///    `Σ_{j,k} (−t)^j t^k (α+iz)_j (β−iz)_k / (j! (α+γ)_j k! (β+δ)_k (α+β)_{j+k})`
///    on the square truncation `j+k ≤ order`.
pub fn chahn_generating_sides(
    which: u8,
    p: &GenParams,
    z: &GaussianRational,
    order: usize,
) -> Result<(FormalSeries, FormalSeries)> {
    check_order(order)?;
    match which {
        1 => chahn_first_sides(p, z, order, &(GaussianRational::one() - p.sum())),
        2 => {
            let i = GaussianRational::imag_unit();
            let ab = p.alpha.clone() + p.beta.clone();
            let ag = p.alpha.clone() + p.gamma.clone();
            let bd = p.beta.clone() + p.delta.clone();
            let hp = p.hahn();
            let lhs = (0..=order)
                .map(|n| {
                    let norm = nonzero(
                        "(α+γ)_n(β+δ)_n(α+β)_n",
                        rising(&ag, n) * rising(&bd, n) * rising(&ab, n),
                    )?;
                    Ok(i_pow::<GaussianRational>(-(n as i64)) * chahn_value(n, &hp, z)? / norm)
                })
                .collect::<Result<Vec<_>>>()?;
            let up = p.alpha.clone() + i.clone() * z.clone();
            let down = p.beta.clone() - i * z.clone();
            let mut rhs = vec![GaussianRational::zero(); order + 1];
            for j in 0..=order {
                let left = i_pow::<GaussianRational>(2 * j as i64) * rising(&up, j)
                    / nonzero("j!(α+γ)_j", crate::exact::factorial::<GaussianRational>(j) * rising(&ag, j))?;
                for k in 0..=order - j {
                    let right = rising(&down, k)
                        / nonzero(
                            "k!(β+δ)_k(α+β)_{j+k}",
                            crate::exact::factorial::<GaussianRational>(k) * rising(&bd, k) * rising(&ab, j + k),
                        )?;
                    rhs[j + k] = rhs[j + k].clone() + left.clone() * right;
                }
            }
            Ok((FormalSeries::new(lhs), FormalSeries::new(rhs)))
        }
        w => Err(which_error(w)),
    }
}

pub fn genfun_chahn_check(which: u8, p: &GenParams, z: &GaussianRational, order: usize) -> VerificationReport {
    let name = format!("genfun_chahn{which} {} z={} order={order}", p.label(), s(z));
    let run = || -> Result<VerificationReport> {
        let (lhs, rhs) = chahn_generating_sides(which, p, z, order)?;
        let mut details = "exact series match".to_string();
        if which == 1 {
            let (quoted, _) = chahn_first_sides(p, z, order, &quoted_exponent(p))?;
            details = match quoted.first_difference(&rhs) {
                Some((k, d)) => format!(
                    "prefactor (1-t)^(1-s) used; quoted (1-t)^(-s-1) first differs at t^{k} by {}",
                    s(&d)
                ),
                None => "prefactor (1-t)^(1-s) used; quoted (1-t)^(-s-1) also matches here".to_string(),
            };
        }
        Ok(VerificationReport::exact(&name, series_residual(&lhs, &rhs), &details))
    };
    run().unwrap_or_else(|e| VerificationReport::from_error(&name, &e))
}

fn linear(c0: GaussianRational, c1: GaussianRational) -> ExactPoly {
    Poly::linear(c0, c1)
}

fn hahn(
    n: i64,
    a: &GaussianRational,
    b: &GaussianRational,
    c: &GaussianRational,
    d: &GaussianRational,
) -> Result<ExactPoly> {
    if n < 0 {
        return Ok(Poly::zero());
    }
    chahn_coeffs_exact(n as usize, &HahnParams::new(a.clone(), b.clone(), c.clone(), d.clone()))
}

/// Both sides of a contiguous relation between continuous Hahn polynomials
/// `p_n(z; α, δ, γ, β)`, as exact polynomials in `z`.
///
/// 1: `(α+β+n) iz p_n(z;α,δ,γ,β) = β(α+iz) p_n(z;α+1,δ,γ−1,β) − α(β−iz) p_n(z;α,δ−1,γ,β+1)
///     + i(n+s−1)(α+iz)(β−iz) p_{n−1}(z;α+1,δ,γ,β+1)`.
/// 2: `(2n+s)(α+iz) p_n(z;α+1,δ,γ,β) = (α+β+n)(n+γ+α) p_n(z;α,δ,γ,β) + i(n+1) p_{n+1}(z;α,δ,γ,β)`.
pub fn contiguous_sides(which: u8, n: usize, p: &GenParams) -> Result<(ExactPoly, ExactPoly)> {
    check_degree(n)?;
    let one = GaussianRational::one();
    let zero = GaussianRational::zero();
    let i = GaussianRational::imag_unit();
    let (al, be, ga, de) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    let nn = q(n as i64);
    let ni = n as i64;
    let sm = p.sum();
    let a_plus = linear(al.clone(), i.clone());
    let b_minus = linear(be.clone(), -i.clone());
    match which {
        1 => {
            let iz = linear(zero, i.clone());
            let lhs = (&iz * &hahn(ni, al, de, ga, be)?).scale(&(al.clone() + be.clone() + nn.clone()));
            let t1 = (&a_plus * &hahn(ni, &(al.clone() + one.clone()), de, &(ga.clone() - one.clone()), be)?)
                .scale(be);
            let t2 = (&b_minus * &hahn(ni, al, &(de.clone() - one.clone()), ga, &(be.clone() + one.clone()))?)
                .scale(al);
            let t3 = (&(&a_plus * &b_minus)
                * &hahn(ni - 1, &(al.clone() + one.clone()), de, ga, &(be.clone() + one.clone()))?)
                .scale(&(i * (nn + sm - one)));
            Ok((lhs, &(&t1 - &t2) + &t3))
        }
        2 => {
            let lhs = (&a_plus * &hahn(ni, &(al.clone() + one.clone()), de, ga, be)?)
                .scale(&(q(2) * nn.clone() + sm));
            let r1 = hahn(ni, al, de, ga, be)?
                .scale(&((al.clone() + be.clone() + nn.clone()) * (nn.clone() + ga.clone() + al.clone())));
            let r2 = hahn(ni + 1, al, de, ga, be)?.scale(&(i * (nn + one)));
            Ok((lhs, &r1 + &r2))
        }
        w => Err(which_error(w)),
    }
}

/// The first contiguous relation in its commonly quoted three-term form, with
/// `(α+β)(α+iz) p_n(z;α+1,δ,γ−1,β)` in place of the two middle terms.
fn quoted_first_contiguous(n: usize, p: &GenParams) -> Result<ExactPoly> {
    let one = GaussianRational::one();
    let i = GaussianRational::imag_unit();
    let (al, be, ga, de) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    let ni = n as i64;
    let a_plus = linear(al.clone(), i.clone());
    let b_minus = linear(be.clone(), -i.clone());
    let t1 = (&a_plus * &hahn(ni, &(al.clone() + one.clone()), de, &(ga.clone() - one.clone()), be)?)
        .scale(&(al.clone() + be.clone()));
    let t3 = (&(&a_plus * &b_minus) * &hahn(ni - 1, &(al.clone() + one.clone()), de, ga, &(be.clone() + one.clone()))?)
        .scale(&(i * (q(ni) + p.sum() - one)));
    Ok(&t1 + &t3)
}

pub fn contiguous_check(which: u8, n: usize, p: &GenParams) -> VerificationReport {
    let name = format!("contiguous{which} n={n} {}", p.label());
    let run = || -> Result<VerificationReport> {
        let (lhs, rhs) = contiguous_sides(which, n, p)?;
        let details = if which == 1 {
            let quoted = quoted_first_contiguous(n, p)?;
            match poly_residual(&lhs, &quoted) {
                Some(r) => format!("four-term form used; quoted three-term form leaves {r}"),
                None => "four-term form used; quoted three-term form also holds here".to_string(),
            }
        } else {
            "exact polynomial identity".to_string()
        };
        Ok(VerificationReport::exact(&name, poly_residual(&lhs, &rhs), &details))
    };
    run().unwrap_or_else(|e| VerificationReport::from_error(&name, &e))
}

/// Classical Jacobi identities checked exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiIdentity {
    /// `d/dx P_n^{(γ,δ)} = ½(n+γ+δ+1) P_{n−1}^{(γ+1,δ+1)}`
    Derivative,
    /// `(n+γ+1)P_n^{(γ,δ)} − (n+1)P_{n+1}^{(γ,δ)} = ½(2n+γ+δ+2)(1−x)P_n^{(γ+1,δ)}`
    Shift,
}

impl JacobiIdentity {
    pub fn name(self) -> &'static str {
        match self {
            JacobiIdentity::Derivative => "derivative",
            JacobiIdentity::Shift => "shift",
        }
    }
}

pub fn jacobi_identity_sides(
    which: JacobiIdentity,
    n: usize,
    gamma: &GaussianRational,
    delta: &GaussianRational,
) -> Result<(ExactPoly, ExactPoly)> {
    check_degree(n)?;
    let one = GaussianRational::one();
    let nn = q(n as i64);
    let jp = JacobiParams::new(gamma.clone(), delta.clone());
    match which {
        JacobiIdentity::Derivative => {
            let lhs = jacobi_coeffs_exact(n, &jp)?.derivative();
            if n == 0 {
                return Ok((lhs, Poly::zero()));
            }
            let shifted = JacobiParams::new(gamma.clone() + one.clone(), delta.clone() + one.clone());
            let c = (nn + gamma.clone() + delta.clone() + one) * half();
            Ok((lhs, jacobi_coeffs_exact(n - 1, &shifted)?.scale(&c)))
        }
        JacobiIdentity::Shift => {
            let lhs = &jacobi_coeffs_exact(n, &jp)?.scale(&(nn.clone() + gamma.clone() + one.clone()))
                - &jacobi_coeffs_exact(n + 1, &jp)?.scale(&(nn.clone() + one.clone()));
            let shifted = JacobiParams::new(gamma.clone() + one.clone(), delta.clone());
            let c = (q(2) * nn + gamma.clone() + delta.clone() + q(2)) * half();
            let one_minus_x = linear(one.clone(), -one);
            Ok((lhs, (&one_minus_x * &jacobi_coeffs_exact(n, &shifted)?).scale(&c)))
        }
    }
}

pub fn jacobi_classical_check(
    which: JacobiIdentity,
    n: usize,
    gamma: &GaussianRational,
    delta: &GaussianRational,
) -> VerificationReport {
    let name = format!("jacobi_{} n={n} gamma={} delta={}", which.name(), s(gamma), s(delta));
    match jacobi_identity_sides(which, n, gamma, delta) {
        Ok((lhs, rhs)) => VerificationReport::exact(name, poly_residual(&lhs, &rhs), "exact polynomial identity"),
        Err(e) => VerificationReport::from_error(name, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gaussian, rational};
    use crate::polynomials::pasternack_coeffs_exact;
    use crate::report::Status;

    fn halves() -> GenParams {
        let h = rational(1, 2);
        GenParams::new(h.clone(), h.clone(), h.clone(), h)
    }

    fn grid() -> Vec<GenParams> {
        vec![
            halves(),
            GenParams::new(rational(1, 3), rational(3, 4), rational(2, 5), rational(5, 7)),
            GenParams::new(rational(2, 1), gaussian(1, 3, 1, 2), rational(3, 2), gaussian(1, 4, -1, 1)),
            GenParams::new(gaussian(1, 2, 1, 4), gaussian(1, 2, -1, 4), rational(1, 1), rational(1, 1)),
            GenParams::new(rational(5, 4), rational(1, 6), gaussian(3, 2, -1, 2), gaussian(-1, 3, 1, 1)),
        ]
    }

    #[test]
    fn order_zero_is_trivial() {
        let (g, d, x) = (rational(1, 3), rational(3, 4), rational(1, 5));
        for which in [1, 2] {
            let (l, r) = jacobi_generating_sides(which, &g, &d, &x, 0).unwrap();
            assert_eq!((l.coeff(0), r.coeff(0)), (&rational(1, 1), &rational(1, 1)));
            let (l, r) = chahn_generating_sides(which, &halves(), &x, 0).unwrap();
            assert_eq!((l.coeff(0), r.coeff(0)), (&rational(1, 1), &rational(1, 1)));
        }
    }

    #[test]
    fn jacobi_generating_functions_hold() {
        let points = [rational(1, 3), rational(-2, 5), rational(1, 1)];
        for (g, d) in [(rational(0, 1), rational(0, 1)), (rational(1, 3), rational(3, 4)), (gaussian(1, 2, 1, 1), rational(-1, 3))] {
            for x in &points {
                for which in [1, 2] {
                    let r = genfun_jacobi_check(which, &g, &d, x, 12);
                    assert!(r.passed(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn jacobi_generating_function_at_one_is_elementary() {
        // P_n(1) = (γ+1)_n/n!: the second form becomes Σ tⁿ/(n!(δ+1)_n)
        let (g, d) = (rational(1, 3), rational(3, 4));
        let (_, rhs) = jacobi_generating_sides(2, &g, &d, &rational(1, 1), 6).unwrap();
        for n in 0..=6 {
            let want = GaussianRational::one()
                / (crate::exact::factorial::<GaussianRational>(n) * rising(&(d.clone() + rational(1, 1)), n));
            assert_eq!(rhs.coeff(n), &want);
        }
    }

    #[test]
    fn chahn_generating_functions_hold() {
        for p in grid() {
            for z in [rational(1, 4), rational(-2, 3), rational(3, 1)] {
                for which in [1, 2] {
                    let r = genfun_chahn_check(which, &p, &z, 10);
                    assert!(r.passed(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn quoted_prefactor_of_first_generating_function_fails() {
        let r = genfun_chahn_check(1, &halves(), &rational(1, 4), 6);
        assert!(r.passed());
        assert!(r.details.contains("first differs at t^1"), "{}", r.details);
    }

    #[test]
    fn first_generating_coefficient_by_hand() {
        // all parameters 1/2: coefficient of t is (1)_1/((1)_1 (1)_1) · p_1/i with p_1 = 2iz·…
        let z = rational(1, 4);
        let (_, rhs) = chahn_generating_sides(1, &halves(), &z, 1).unwrap();
        // p_1(z; ½,½,½,½) = i(1)(1)(1 − 2(½+iz)) = 2z
        assert_eq!(rhs.coeff(1), &(rational(2, 1) * z / GaussianRational::imag_unit()));
    }

    #[test]
    fn bateman_specialization_gives_bateman_coefficients() {
        // all parameters 1/2: Σ F_n(2iz) tⁿ
        for z in [rational(1, 4), rational(-3, 5), rational(2, 1)] {
            let (lhs, _) = chahn_generating_sides(1, &halves(), &z, 8).unwrap();
            let arg = rational(2, 1) * GaussianRational::imag_unit() * z.clone();
            for n in 0..=8 {
                let f = pasternack_coeffs_exact(n, &rational(0, 1)).unwrap().eval(&arg);
                assert_eq!(lhs.coeff(n), &f, "n={n}");
            }
        }
    }

    #[test]
    fn contiguous_relations_hold() {
        for p in grid() {
            for n in 0..=10 {
                for which in [1, 2] {
                    let r = contiguous_check(which, n, &p);
                    assert!(r.passed(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn quoted_first_contiguous_relation_fails_at_zero() {
        let r = contiguous_check(1, 0, &halves());
        assert!(r.details.contains("quoted three-term form leaves"), "{}", r.details);
    }

    #[test]
    fn second_contiguous_relation_at_zero_by_hand() {
        // (s)(α+iz) = (α+β)(γ+α) + i p_1(z; α,δ,γ,β)
        let (lhs, rhs) = contiguous_sides(2, 0, &halves()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.degree(), Some(1));
    }

    #[test]
    fn jacobi_classical_identities_hold() {
        let (g, d) = (rational(1, 3), rational(3, 4));
        for n in 0..=12 {
            for which in [JacobiIdentity::Derivative, JacobiIdentity::Shift] {
                let r = jacobi_classical_check(which, n, &g, &d);
                assert!(r.passed(), "{r:?}");
            }
        }
        let (lhs, rhs) = jacobi_identity_sides(JacobiIdentity::Derivative, 1, &rational(0, 1), &rational(0, 1)).unwrap();
        assert_eq!(lhs, Poly::constant(rational(1, 1)));
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn bad_inputs_are_errors() {
        assert_eq!(genfun_jacobi_check(3, &rational(0, 1), &rational(0, 1), &rational(0, 1), 4).status, Status::Error);
        assert_eq!(genfun_jacobi_check(1, &rational(-2, 1), &rational(0, 1), &rational(0, 1), 4).status, Status::Error);
        assert_eq!(contiguous_check(1, 41, &halves()).status, Status::Error);
        assert_eq!(genfun_chahn_check(2, &halves(), &rational(0, 1), 41).status, Status::Error);
    }
}

//! Registry of named verification suites behind `hahnlab verify` and the
//! acceptance harness.
//!
//! Each suite runs a fixed set of checks with pinned parameters and
//! tolerances from [`crate::tolerances`]. Suites run one after another in
//! registry order; the work inside a suite is parallel when enabled, but
//! reports always come back in the same order.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{gaussian, rational, GaussianRational};
use crate::identities::{contiguous_check, genfun_chahn_check, genfun_jacobi_check, jacobi_classical_check, GenParams, JacobiIdentity};
use crate::operator::{hahn_operator_identity_check, pasternack_operator_check, recurrence_check, shifted_operator_identity_check};
use crate::orthogonality::{
    barnes_check, barnes_random_check, bateman_gram_check, chahn_gram_check, jacobi_gram_check,
    pasternack_biortho_gram_check, pasternack_gram_check, pasternack_hahn_consistency_check, WeightParams,
};
use crate::parallel;
use crate::polynomials::{pasternack_reflection_check, HahnParams};
use crate::quadrature::QuadratureConfig;
use crate::report::{CheckConfig, VerificationReport};
use crate::tolerances as tol;
use crate::transforms::{fourier_grid_check, mellin_grid_check, parseval_check, ParsevalParams, TransformParams};

/// Tightest relative tolerance requested from the quadrature; below this
/// the Kronrod error estimate is dominated by rounding.
pub const MIN_QUAD_REL_TOL: f64 = 1e-14;

/// Run-wide settings of a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SuiteOptions {
    /// Replaces every pinned relative tolerance.
    pub rel_tol: Option<f64>,
    pub parallel: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            rel_tol: None,
            parallel: parallel::available(),
        }
    }
}

impl SuiteOptions {
    /// Check settings for pinned tolerances, with quadrature two decades
    /// tighter than the relative tolerance.
    pub fn config(&self, rel_tol: f64, abs_tol: f64) -> CheckConfig {
        let rel = self.rel_tol.unwrap_or(rel_tol);
        let quad = QuadratureConfig::default();
        CheckConfig {
            quad: QuadratureConfig {
                rel_tol: (rel / 100.0).clamp(MIN_QUAD_REL_TOL, quad.rel_tol),
                parallel: self.parallel,
                ..quad
            },
            rel_tol: rel,
            abs_tol,
        }
    }
}

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    /// Exact suites compare with zero residual and ignore tolerances.
    pub exact: bool,
    run: fn(&SuiteOptions) -> Vec<VerificationReport>,
}

impl Suite {
    pub fn run(&self, opts: &SuiteOptions) -> Vec<VerificationReport> {
        (self.run)(opts)
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ci(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const SUITES: &[Suite] = &[
    Suite { name: "bateman", description: "Bateman Gram matrix, degrees up to 10", exact: false, run: bateman },
    Suite { name: "pasternack", description: "Pasternack Gram matrices for m in {1/3, 1/2, 1e-8, 0} and norm consistency", exact: false, run: pasternack },
    Suite { name: "biorthogonality", description: "Pasternack biorthogonality at m = 1/3 with reflected constants", exact: false, run: biorthogonality },
    Suite { name: "chahn_gram", description: "continuous Hahn Gram matrices of size 8 for three parameter sets", exact: false, run: chahn_gram },
    Suite { name: "barnes", description: "Barnes' first lemma at two fixed and ten seeded random tuples", exact: false, run: barnes },
    Suite { name: "fourier", description: "Fourier pair grid: n <= 8, five frequencies, five tuples", exact: false, run: fourier },
    Suite { name: "mellin", description: "Mellin route against the Fourier route, with sign convention tally", exact: false, run: mellin },
    Suite { name: "parseval", description: "Parseval identity, general and specialized parameters", exact: false, run: parseval },
    Suite { name: "jacobi_ortho", description: "Jacobi Gram matrices including complex parameters", exact: false, run: jacobi_ortho },
    Suite { name: "operator", description: "operator identities and the shifted operator identity", exact: true, run: operator },
    Suite { name: "recurrence", description: "three-term recurrence structure, n <= 10", exact: true, run: recurrence },
    Suite { name: "contiguous", description: "both contiguous relations, n <= 10", exact: true, run: contiguous },
    Suite { name: "genfun", description: "four generating functions to order 12 at three points", exact: true, run: genfun },
    Suite { name: "jacobi_classical", description: "Jacobi derivative and shift identities, n <= 12", exact: true, run: jacobi_classical },
    Suite { name: "reflection", description: "Pasternack reflection identity, n <= 12", exact: true, run: reflection },
];

/// Suites named by a filter: `all`, or a comma-separated list where each
/// term selects every suite whose name contains it.
pub fn select(filter: &str) -> Result<Vec<&'static Suite>> {
    let filter = filter.trim();
    if filter == "all" {
        return Ok(SUITES.iter().collect());
    }
    let terms: Vec<&str> = filter.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    if terms.is_empty() {
        return Err(Error::Domain("empty suite filter".into()));
    }
    for t in &terms {
        if !SUITES.iter().any(|s| s.name.contains(t)) {
            let names: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
            return Err(Error::Domain(format!("no suite matches {t:?}; known suites: {}", names.join(", "))));
        }
    }
    Ok(SUITES.iter().filter(|s| terms.iter().any(|t| s.name.contains(t))).collect())
}

pub fn run_selected(suites: &[&Suite], opts: &SuiteOptions) -> Vec<VerificationReport> {
    suites.iter().flat_map(|s| s.run(opts)).collect()
}

fn bateman(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::GRAM_DIAG_REL, tol::GRAM_OFFDIAG_ABS);
    vec![bateman_gram_check(tol::BATEMAN_MAX_N, &cfg).1]
}

pub fn pasternack_ms() -> [Complex64; 4] {
    [c(1.0 / 3.0), c(0.5), c(tol::SMALL_M), c(0.0)]
}

fn pasternack(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::GRAM_DIAG_REL, tol::GRAM_OFFDIAG_ABS);
    let mut out: Vec<_> = pasternack_ms()
        .iter()
        .map(|&m| pasternack_gram_check(tol::PASTERNACK_MAX_N, m, &cfg).1)
        .collect();
    let closed = o.config(tol::CLOSED_FORM_REL, 0.0);
    for m in [c(0.0), c(1.0 / 3.0), c(0.5)] {
        out.push(pasternack_hahn_consistency_check(tol::PASTERNACK_MAX_N, m, &closed));
    }
    out
}

fn biorthogonality(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::GRAM_DIAG_REL, tol::GRAM_OFFDIAG_ABS);
    vec![pasternack_biortho_gram_check(tol::PASTERNACK_MAX_N, c(1.0 / 3.0), &cfg).1]
}

pub fn chahn_weight_sets() -> [WeightParams; 3] {
    let h = c(0.5);
    let al = ci(0.5, 0.25);
    let be = ci(0.75, -0.25);
    [
        WeightParams::new(h, h, h, h),
        WeightParams::new(c(1.0), c(0.5), c(0.75), c(1.25)),
        WeightParams::new(al, be, al.conj(), be.conj()),
    ]
}

fn chahn_gram(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::GRAM_DIAG_REL, tol::CHAHN_OFFDIAG_NORMALIZED);
    chahn_weight_sets()
        .iter()
        .map(|w| chahn_gram_check(tol::CHAHN_GRAM_SIZE, w, &cfg).1)
        .collect()
}

fn barnes(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::BARNES_REL, 0.0);
    let [w0, w1, _] = chahn_weight_sets();
    vec![
        barnes_check(&w0, &cfg),
        barnes_check(&w1, &cfg),
        barnes_check(&w1.swapped(), &cfg),
        barnes_random_check(tol::BARNES_TUPLES, tol::BARNES_SEED, &cfg),
    ]
}

/// `(α, β, γ, δ)` tuples of the transform grids.
pub fn transform_tuples() -> Vec<TransformParams> {
    vec![
        TransformParams::new(c(0.5), c(0.5), c(0.0), c(0.0)),
        TransformParams::new(c(1.0), c(0.5), c(1.0 / 3.0), c(-0.25)),
        TransformParams::new(ci(0.75, 0.25), ci(0.75, -0.25), c(0.5), c(0.5)),
        TransformParams::new(c(2.0), c(1.5), c(1.0), c(2.0)),
        TransformParams::new(c(0.25), c(1.25), ci(1.5, -0.5), ci(-1.0 / 3.0, 1.0)),
    ]
}

pub const FOURIER_ZS: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 5.0];

/// Mellin arguments `λ = z/2`, the Fourier frequencies after `x = e^{−2u}`.
pub const MELLIN_LAMBDAS: [f64; 5] = [0.0, 0.25, 0.5, 1.0, 2.5];

fn fourier(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::TRANSFORM_REL, 0.0);
    vec![fourier_grid_check(tol::TRANSFORM_MAX_N, &FOURIER_ZS, &transform_tuples(), &cfg)]
}

fn mellin(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::TRANSFORM_REL, 0.0);
    vec![mellin_grid_check(tol::TRANSFORM_MAX_N, &MELLIN_LAMBDAS, &transform_tuples(), &cfg)]
}

fn parseval(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::PARSEVAL_REL, tol::PARSEVAL_ABS);
    let general = ParsevalParams {
        alpha: ci(0.6, 0.2),
        beta: c(1.1),
        a: c(0.8),
        b: ci(0.45, -0.3),
        gamma: c(0.25),
        delta: c(-0.4),
        c: ci(1.5, 0.5),
        d: c(0.3),
    };
    let specialized = ParsevalParams::specialized(c(0.75), c(1.0), c(0.5), c(1.25));
    // α = β = (1+m)/2, a = b = (1−m)/2 at m = 1/3
    let mixed = ParsevalParams::specialized(c(2.0 / 3.0), c(2.0 / 3.0), c(1.0 / 3.0), c(1.0 / 3.0));
    let mut out = Vec::new();
    for (p, pairs) in [
        (&general, &[(0, 0), (1, 2), (3, 1)][..]),
        (&specialized, &[(1, 3), (2, 2)][..]),
        (&mixed, &[(2, 0), (2, 2)][..]),
    ] {
        for &(n, m) in pairs {
            out.push(parseval_check(n, m, p, &cfg));
        }
    }
    out
}

fn jacobi_ortho(o: &SuiteOptions) -> Vec<VerificationReport> {
    let cfg = o.config(tol::JACOBI_REL, tol::JACOBI_REL);
    [
        (c(0.0), c(0.0)),
        (c(-0.5), c(-0.75)),
        (ci(0.5, 1.0), ci(0.5, -1.0)),
    ]
    .iter()
    .map(|&(a, b)| jacobi_gram_check(tol::JACOBI_MAX_N, a, b, &cfg).1)
    .collect()
}

fn genparams_grid() -> Vec<GenParams> {
    vec![
        GenParams::new(rational(1, 2), rational(1, 2), rational(1, 2), rational(1, 2)),
        GenParams::new(rational(1, 3), rational(3, 4), rational(2, 5), rational(5, 7)),
        GenParams::new(rational(2, 1), gaussian(1, 3, 1, 2), rational(3, 2), gaussian(1, 4, -1, 1)),
        GenParams::new(gaussian(1, 2, 1, 4), gaussian(1, 2, -1, 4), rational(1, 1), rational(1, 1)),
        GenParams::new(rational(5, 4), rational(1, 6), gaussian(3, 2, -1, 2), gaussian(-1, 3, 1, 1)),
    ]
}

fn operator(_: &SuiteOptions) -> Vec<VerificationReport> {
    let third = rational(1, 3);
    let pasternack_half = (rational(1, 1) + third.clone()) / rational(2, 1);
    let sets: [(GaussianRational, GaussianRational, GaussianRational, GaussianRational); 3] = [
        (rational(1, 2), rational(1, 2), rational(0, 1), rational(0, 1)),
        (pasternack_half.clone(), pasternack_half, rational(0, 1), rational(0, 1)),
        (rational(1, 3), gaussian(3, 4, 1, 2), rational(2, 5), rational(-1, 3)),
    ];
    let mut out = Vec::new();
    for (al, be, ga, de) in &sets {
        for n in 0..=8 {
            out.push(hahn_operator_identity_check(n, al, be, ga, de));
        }
    }
    for m in [rational(0, 1), third, rational(1, 2)] {
        for n in 0..=8 {
            out.push(pasternack_operator_check(n, &m));
        }
    }
    for (al, be) in [(rational(2, 7), gaussian(1, 3, 1, 2)), (rational(1, 2), rational(1, 2))] {
        for r in 0..=8 {
            out.push(shifted_operator_identity_check(&al, &be, r));
        }
    }
    out
}

fn recurrence(_: &SuiteOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for g in genparams_grid() {
        let p = HahnParams::new(g.alpha, g.delta, g.gamma, g.beta);
        for n in 1..=10 {
            out.push(recurrence_check(n, &p));
        }
    }
    out
}

fn contiguous(_: &SuiteOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for p in genparams_grid() {
        for which in [1, 2] {
            for n in 0..=10 {
                out.push(contiguous_check(which, n, &p));
            }
        }
    }
    out
}

fn genfun(_: &SuiteOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let points = [rational(1, 3), rational(-2, 5), rational(3, 2)];
    for (g, d) in [(rational(0, 1), rational(0, 1)), (rational(1, 3), rational(3, 4))] {
        for x in &points {
            for which in [1, 2] {
                out.push(genfun_jacobi_check(which, &g, &d, x, tol::GENFUN_ORDER));
            }
        }
    }
    let zs = [rational(1, 4), rational(-2, 3), rational(3, 1)];
    for p in genparams_grid().iter().take(3) {
        for z in &zs {
            for which in [1, 2] {
                out.push(genfun_chahn_check(which, p, z, tol::GENFUN_ORDER));
            }
        }
    }
    out
}

fn jacobi_classical(_: &SuiteOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for (g, d) in [(rational(1, 3), rational(3, 4)), (rational(0, 1), rational(0, 1))] {
        for which in [JacobiIdentity::Derivative, JacobiIdentity::Shift] {
            for n in 0..=12 {
                out.push(jacobi_classical_check(which, n, &g, &d));
            }
        }
    }
    out
}

fn reflection(_: &SuiteOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for m in [rational(1, 3), rational(1, 2), gaussian(2, 5, 1, 3)] {
        for n in 0..=12 {
            out.push(pasternack_reflection_check(n, &m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_select_by_substring() {
        assert_eq!(select("all").unwrap().len(), SUITES.len());
        let names: Vec<_> = select("barnes,genfun").unwrap().iter().map(|s| s.name).collect();
        assert_eq!(names, ["barnes", "genfun"]);
        let names: Vec<_> = select("jacobi").unwrap().iter().map(|s| s.name).collect();
        assert_eq!(names, ["jacobi_ortho", "jacobi_classical"]);
        assert!(select("nothing").is_err());
        assert!(select(" , ").is_err());
    }

    #[test]
    fn suite_names_are_unique() {
        let mut names: Vec<_> = SUITES.iter().map(|s| s.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn override_replaces_relative_tolerance() {
        let o = SuiteOptions { rel_tol: Some(1e-6), parallel: false };
        let cfg = o.config(1e-8, 1e-10);
        assert_eq!(cfg.rel_tol, 1e-6);
        assert_eq!(cfg.abs_tol, 1e-10);
        assert_eq!(cfg.quad.rel_tol, 1e-10);
        assert!(!cfg.quad.parallel);
        let tight = SuiteOptions { rel_tol: Some(1e-13), parallel: true };
        assert_eq!(tight.config(1e-8, 0.0).quad.rel_tol, MIN_QUAD_REL_TOL);
    }

    #[test]
    fn exact_suites_pass() {
        let o = SuiteOptions::default();
        for s in SUITES.iter().filter(|s| s.exact) {
            for r in s.run(&o) {
                assert!(r.passed(), "{}: {r:?}", s.name);
            }
        }
    }
}

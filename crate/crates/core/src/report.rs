use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::quadrature::QuadratureConfig;

/// Rounding scale of a quadrature result relative to `∫|f|`. Comparisons of
/// integrals whose value is much smaller than `∫|f|` are not held to more
/// than this fraction of `∫|f|`.
pub const ROUNDING_FLOOR: f64 = 1e3 * f64::EPSILON;

/// Pass criteria of a numerical check and the quadrature settings it runs
/// with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub quad: QuadratureConfig,
    /// Relative tolerance on nonzero expected values.
    pub rel_tol: f64,
    /// Absolute tolerance on values expected to vanish.
    pub abs_tol: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            quad: QuadratureConfig::default(),
            rel_tol: 1e-8,
            abs_tol: 1e-10,
        }
    }
}

impl CheckConfig {
    pub fn with_tolerances(self, rel_tol: f64, abs_tol: f64) -> Self {
        CheckConfig {
            rel_tol,
            abs_tol,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct QuadDiagnostics {
    pub evaluations: u64,
    pub estimated_error: f64,
}

impl QuadDiagnostics {
    pub fn merge(&mut self, other: QuadDiagnostics) {
        self.evaluations += other.evaluations;
        self.estimated_error = self.estimated_error.max(other.estimated_error);
    }
}

/// Outcome of one named check. Exact checks carry zero errors and empty
/// diagnostics; numerical checks carry the worst errors over everything
/// they compared.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub status: Status,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub details: String,
    pub quad_diagnostics: QuadDiagnostics,
}

impl VerificationReport {
    pub fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            status: Status::Pass,
            max_abs_err: 0.0,
            max_rel_err: 0.0,
            details: details.into(),
            quad_diagnostics: QuadDiagnostics::default(),
        }
    }

    pub fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        VerificationReport {
            status: Status::Fail,
            ..VerificationReport::pass(name, details)
        }
    }

    pub fn from_error(name: impl Into<String>, err: &Error) -> Self {
        VerificationReport {
            status: Status::Error,
            ..VerificationReport::pass(name, err.to_string())
        }
    }

    /// Exact check: passes iff there is no residual description.
    pub fn exact(name: impl Into<String>, residual: Option<String>, details: &str) -> Self {
        match residual {
            None => VerificationReport::pass(name, details),
            Some(r) if details.is_empty() => VerificationReport::fail(name, r),
            Some(r) => VerificationReport::fail(name, format!("{details}; {r}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `|got − want|` relative to `max(|want|, floor/rel_tol)`: the scale at
/// which the comparison is judged. A comparison with a positive `rel_tol`
/// passes exactly when this is at most `rel_tol`, so values that vanish in
/// closed form do not report meaningless ratios. Without a relative
/// tolerance the scale is `|want|`, or one when `want` is zero.
pub fn relative_error(got: num_complex::Complex64, want: num_complex::Complex64, rel_tol: f64, floor: f64) -> f64 {
    let abs = (got - want).norm();
    let scale = if rel_tol > 0.0 {
        want.norm().max(floor / rel_tol)
    } else {
        want.norm()
    };
    if scale > 0.0 {
        abs / scale
    } else {
        abs
    }
}

/// Accumulates numerical comparisons into a single report.
///
/// A comparison passes when `|got − want| <= max(rel_tol·|want|, abs_tol)`.
/// Relative errors are measured as in [`relative_error`].
#[derive(Debug, Clone)]
pub struct Comparison {
    name: String,
    rel_tol: f64,
    abs_tol: f64,
    max_abs: f64,
    max_rel: f64,
    failures: Vec<String>,
    notes: Vec<String>,
    diag: QuadDiagnostics,
    count: usize,
}

impl Comparison {
    pub fn new(name: impl Into<String>, rel_tol: f64, abs_tol: f64) -> Self {
        Comparison {
            name: name.into(),
            rel_tol,
            abs_tol,
            max_abs: 0.0,
            max_rel: 0.0,
            failures: Vec::new(),
            notes: Vec::new(),
            diag: QuadDiagnostics::default(),
            count: 0,
        }
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn check(&mut self, label: &str, got: num_complex::Complex64, want: num_complex::Complex64) -> bool {
        self.check_scaled(label, got, want, self.abs_tol)
    }

    /// Like [`Comparison::check`] but with a per-comparison absolute floor.
    pub fn check_scaled(
        &mut self,
        label: &str,
        got: num_complex::Complex64,
        want: num_complex::Complex64,
        abs_floor: f64,
    ) -> bool {
        self.count += 1;
        let abs = (got - want).norm();
        let rel = relative_error(got, want, self.rel_tol, abs_floor);
        let ok = abs.is_finite() && abs <= (self.rel_tol * want.norm()).max(abs_floor);
        self.max_abs = self.max_abs.max(if abs.is_finite() { abs } else { f64::MAX });
        self.max_rel = self.max_rel.max(if rel.is_finite() { rel } else { f64::MAX });
        if !ok {
            self.failures
                .push(format!("{label}: got {got}, want {want} (abs {abs:.3e}, rel {rel:.3e})"));
        }
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn add_diagnostics(&mut self, d: QuadDiagnostics) {
        self.diag.merge(d);
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut details = format!("{} comparisons", self.count);
        for n in &self.notes {
            details.push_str("; ");
            details.push_str(n);
        }
        const SHOWN: usize = 5;
        for f in self.failures.iter().take(SHOWN) {
            details.push_str("; FAIL ");
            details.push_str(f);
        }
        if self.failures.len() > SHOWN {
            details.push_str(&format!("; ... {} more failures", self.failures.len() - SHOWN));
        }
        VerificationReport {
            name: self.name,
            status,
            max_abs_err: self.max_abs,
            max_rel_err: self.max_rel,
            details,
            quad_diagnostics: self.diag,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn comparison_tolerances() {
        let mut c = Comparison::new("t", 1e-8, 1e-10);
        assert!(c.check("a", Complex64::new(1.0 + 5e-9, 0.0), Complex64::new(1.0, 0.0)));
        assert!(c.check("zero", Complex64::new(5e-11, 0.0), Complex64::new(0.0, 0.0)));
        assert!(!c.check("bad", Complex64::new(2e-10, 0.0), Complex64::new(0.0, 0.0)));
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert!(r.details.contains("bad"));
        assert!((r.max_abs_err - 5e-9).abs() < 1e-15);
        // 2e-10 against zero, judged at scale 1e-10/1e-8
        assert!((r.max_rel_err - 2e-8).abs() < 1e-20);
    }

    #[test]
    fn status_serializes_lowercase() {
        let r = VerificationReport::pass("x", "");
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains(r#""status":"pass""#));
        assert!(s.contains(r#""quad_diagnostics":{"evaluations":0,"estimated_error":0.0}"#));
    }
}

//! Acceptance run: each criterion executes its verification suites at the
//! pinned tolerances, checks its time budget where it has one, and prints
//! a single PASS or FAIL line. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hahnlab::report::VerificationReport;
use hahnlab::suite::{select, SuiteOptions};

struct Criterion {
    id: &'static str,
    title: &'static str,
    suites: &'static str,
    budget: Option<Duration>,
    /// Report names whose details are echoed as findings.
    findings: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: "AC1",
        title: "Bateman orthogonality, n,m <= 10",
        suites: "bateman",
        budget: Some(Duration::from_secs(30)),
        findings: &[],
    },
    Criterion {
        id: "AC2",
        title: "Pasternack orthogonality, m in {1/3, 1/2, 1e-8, 0}, n,p <= 8",
        suites: "pasternack",
        budget: None,
        findings: &[],
    },
    Criterion {
        id: "AC3",
        title: "Pasternack biorthogonality at m = 1/3 with reflected constants",
        suites: "biorthogonality,reflection",
        budget: None,
        findings: &["pasternack_biortho_gram"],
    },
    Criterion {
        id: "AC4",
        title: "continuous Hahn Gram matrices, N = 8, three parameter sets",
        suites: "chahn_gram",
        budget: Some(Duration::from_secs(120)),
        findings: &[],
    },
    Criterion {
        id: "AC5",
        title: "Barnes' first lemma, 10 seeded random tuples",
        suites: "barnes",
        budget: None,
        findings: &[],
    },
    Criterion {
        id: "AC6",
        title: "Fourier pair grid and Mellin route",
        suites: "fourier,mellin",
        budget: None,
        findings: &["mellin_pair_grid"],
    },
    Criterion {
        id: "AC7",
        title: "exact identities with zero residual",
        suites: "operator,recurrence,contiguous,genfun,jacobi_classical,reflection",
        budget: None,
        findings: &[],
    },
    Criterion {
        id: "AC8",
        title: "Jacobi orthogonality including alpha = 1/2+i, beta = 1/2-i",
        suites: "jacobi_ortho",
        budget: None,
        findings: &[],
    },
];

fn run(c: &Criterion, opts: &SuiteOptions) -> bool {
    let suites = match select(c.suites) {
        Ok(s) => s,
        Err(e) => {
            println!("FAIL {} {}: {e}", c.id, c.title);
            return false;
        }
    };
    let start = Instant::now();
    let reports: Vec<VerificationReport> = suites.iter().flat_map(|s| s.run(opts)).collect();
    let elapsed = start.elapsed();

    let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.passed()).collect();
    let over_budget = c.budget.is_some_and(|b| elapsed > b);
    let ok = failed.is_empty() && !over_budget && !reports.is_empty();
    let max_rel = reports.iter().map(|r| r.max_rel_err).fold(0.0, f64::max);
    let max_abs = reports.iter().map(|r| r.max_abs_err).fold(0.0, f64::max);
    let budget = c.budget.map(|b| format!(" (budget {}s)", b.as_secs())).unwrap_or_default();
    println!(
        "{} {} {}: {}/{} checks, max_rel_err {:.2e}, max_abs_err {:.2e}, {:.2}s{}",
        if ok { "PASS" } else { "FAIL" },
        c.id,
        c.title,
        reports.len() - failed.len(),
        reports.len(),
        max_rel,
        max_abs,
        elapsed.as_secs_f64(),
        budget
    );
    for r in &failed {
        println!("    failed {}: {}", r.name, r.details);
    }
    if over_budget {
        println!("    runtime {:.2}s exceeds the budget", elapsed.as_secs_f64());
    }
    for name in c.findings {
        for r in reports.iter().filter(|r| r.name == *name) {
            println!("    {}: {}", r.name, r.details);
        }
    }
    ok
}

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let results: Vec<bool> = CRITERIA.iter().map(|c| run(c, &opts)).collect();
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", CRITERIA.len());
    if passed == CRITERIA.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

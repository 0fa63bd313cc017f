//! `hahnlab`: evaluate the polynomial families, run the verification
//! suites, and compute continuous Hahn Gram matrices.
//!
//! Exit codes: 0 when everything passes, 1 when a verification fails,
//! 2 on usage, parse or domain errors.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use hahnlab::exact::{gaussian_to_string, GaussianRational};
use hahnlab::orthogonality::{chahn_gram, judge_chahn_gram, WeightParams, MAX_GRAM_SIZE};
use hahnlab::parse::{parse_complex, parse_gaussian, parse_real_f64};
use hahnlab::polynomials::{
    chahn_eval, chahn_value, jacobi_eval, jacobi_value, pasternack_eval, pasternack_value, HahnParams, JacobiParams,
};
use hahnlab::report::{Status, VerificationReport};
use hahnlab::suite::{run_selected, select, SuiteOptions};
use hahnlab::{parallel, tolerances, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "hahnlab", version, about = "Jacobi and continuous Hahn polynomials: evaluation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one polynomial at one point.
    Eval(EvalArgs),
    /// Run verification suites and report every check.
    Verify(VerifyArgs),
    /// Continuous Hahn Gram matrix with its closed-form diagonal.
    Gram(GramArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Jacobi,
    Chahn,
    Bateman,
    Pasternack,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Exact when every input is an integer or fraction, floating otherwise.
    Auto,
    Float,
    Exact,
}

#[derive(clap::Args)]
struct EvalArgs {
    family: Family,
    #[arg(long)]
    n: usize,
    /// Evaluation point, e.g. `1/2`, `0.3-2i`.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    mode: Mode,
}

#[derive(clap::Args)]
struct Tolerance {
    /// Relative tolerance replacing every pinned one.
    #[arg(long, env = "HAHNLAB_TOL")]
    rel_tol: Option<String>,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

impl Tolerance {
    fn options(&self) -> Result<SuiteOptions, Error> {
        let rel_tol = match &self.rel_tol {
            None => None,
            Some(s) => {
                let v = parse_real_f64(s)?;
                if !(v > 0.0 && v < 1.0) {
                    return Err(Error::Domain(format!("relative tolerance must lie in (0, 1), got {s}")));
                }
                Some(v)
            }
        };
        Ok(SuiteOptions {
            rel_tol,
            parallel: parallel::available() && !self.sequential,
        })
    }
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// `all`, or a comma-separated list of suite name fragments.
    #[arg(long, default_value = "all")]
    suite: String,
    /// JSON report path; a manifest is written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// List the suites and exit.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    tolerance: Tolerance,
}

#[derive(clap::Args)]
struct GramArgs {
    /// Matrix size.
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// CSV path; the JSON summary and manifest are written next to it.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    tolerance: Tolerance,
}

#[derive(Serialize)]
struct RunManifest {
    command: String,
    parameters: BTreeMap<String, String>,
    seed_independent: bool,
    outputs: Vec<String>,
    version: &'static str,
    /// Seconds since the Unix epoch; the only field that varies between
    /// identical runs.
    timestamp: u64,
}

impl RunManifest {
    fn new(command: &str, parameters: BTreeMap<String, String>, seed_independent: bool, outputs: &[&Path]) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters,
            seed_independent,
            outputs: outputs.iter().map(|p| p.display().to_string()).collect(),
            version: env!("CARGO_PKG_VERSION"),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        }
    }
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}{suffix}"))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn format_float(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:?}", z.re)
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{:?}{sign}{:?}i", z.re, z.im.abs())
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, Error> {
    value
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("--{flag} is required for this family")))
}

fn eval(args: &EvalArgs) -> Result<String, Error> {
    let zero = "0".to_string();
    let inputs: Vec<&str> = match args.family {
        Family::Jacobi => vec![required(&args.gamma, "gamma")?, required(&args.delta, "delta")?],
        Family::Chahn => vec![
            required(&args.a, "a")?,
            required(&args.b, "b")?,
            required(&args.c, "c")?,
            required(&args.d, "d")?,
        ],
        Family::Bateman => vec![zero.as_str()],
        Family::Pasternack => vec![required(&args.m, "m")?],
    };
    let exact = match args.mode {
        Mode::Exact => true,
        Mode::Float => false,
        Mode::Auto => inputs.iter().chain([&args.x.as_str()]).all(|s| parse_gaussian(s).is_ok()),
    };
    if exact {
        let p = inputs.iter().map(|s| parse_gaussian(s)).collect::<Result<Vec<_>, _>>()?;
        let x = parse_gaussian(&args.x)?;
        let v: GaussianRational = match args.family {
            Family::Jacobi => jacobi_value(args.n, &JacobiParams::new(p[0].clone(), p[1].clone()), &x)?,
            Family::Chahn => chahn_value(
                args.n,
                &HahnParams::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()),
                &x,
            )?,
            Family::Bateman | Family::Pasternack => pasternack_value(args.n, &p[0], &x)?,
        };
        Ok(gaussian_to_string(&v))
    } else {
        let p = inputs.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>, _>>()?;
        let x = parse_complex(&args.x)?;
        let v = match args.family {
            Family::Jacobi => jacobi_eval(args.n, &JacobiParams::new(p[0], p[1]), x)?,
            Family::Chahn => chahn_eval(args.n, &HahnParams::new(p[0], p[1], p[2], p[3]), x)?,
            Family::Bateman | Family::Pasternack => pasternack_eval(args.n, p[0], x)?,
        };
        if !v.is_finite() {
            return Err(Error::Overflow(format!("value {v} is not finite")));
        }
        Ok(format_float(v))
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

fn verify(args: &VerifyArgs) -> Result<u8, Error> {
    let suites = select(&args.suite)?;
    if args.list {
        for s in &suites {
            println!("{:<18} {}{}", s.name, s.description, if s.exact { " [exact]" } else { "" });
        }
        return Ok(0);
    }
    let opts = args.tolerance.options()?;
    let reports = run_selected(&suites, &opts);
    let summary = |w: &mut dyn Write| -> std::io::Result<()> {
        for r in &reports {
            writeln!(
                w,
                "{:<5} {} (max_abs_err {:.2e}, max_rel_err {:.2e})",
                status_word(r.status),
                r.name,
                r.max_abs_err,
                r.max_rel_err
            )?;
        }
        let passed = reports.iter().filter(|r| r.passed()).count();
        writeln!(w, "{passed}/{} checks passed", reports.len())
    };
    match &args.out {
        Some(out) => {
            summary(&mut std::io::stdout().lock())?;
            write_json(out, &reports)?;
            let manifest_path = sibling(out, ".manifest.json");
            let mut params = BTreeMap::new();
            params.insert("suite".to_string(), args.suite.clone());
            params.insert("parallel".to_string(), opts.parallel.to_string());
            if let Some(t) = opts.rel_tol {
                params.insert("rel_tol".to_string(), format!("{t:e}"));
            }
            let uses_seed = suites.iter().any(|s| s.name == "barnes");
            if uses_seed {
                params.insert("seed".to_string(), tolerances::BARNES_SEED.to_string());
            }
            write_json(&manifest_path, &RunManifest::new("verify", params, !uses_seed, &[out.as_path()]))?;
        }
        None => {
            summary(&mut std::io::stderr().lock())?;
            let mut stdout = std::io::stdout().lock();
            serde_json::to_writer_pretty(&mut stdout, &reports)?;
            writeln!(stdout)?;
        }
    }
    Ok(if reports.iter().all(VerificationReport::passed) { 0 } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct GramSummary<'a> {
    n: usize,
    alpha: String,
    beta: String,
    a: String,
    b: String,
    status: Status,
    expected_diagonal: Vec<String>,
    max_offdiag_abs: f64,
    max_offdiag_normalized: f64,
    max_diag_rel_err: f64,
    parity_zeroed: usize,
    report: &'a VerificationReport,
}

fn gram(args: &GramArgs) -> Result<u8, Error> {
    if args.n == 0 || args.n > MAX_GRAM_SIZE {
        return Err(Error::Domain(format!("--n must be between 1 and {MAX_GRAM_SIZE}")));
    }
    let w = WeightParams::new(
        parse_complex(&args.alpha)?,
        parse_complex(&args.beta)?,
        parse_complex(&args.a)?,
        parse_complex(&args.b)?,
    );
    let opts = args.tolerance.options()?;
    let cfg = opts.config(tolerances::GRAM_DIAG_REL, tolerances::CHAHN_OFFDIAG_NORMALIZED);
    let g = chahn_gram(args.n, &w, &cfg.quad)?;
    let report = judge_chahn_gram(&g, &w, &cfg);
    let mut csv = BufWriter::new(File::create(&args.out)?);
    g.write_csv(&mut csv)?;
    csv.flush()?;
    let summary_path = sibling(&args.out, ".summary.json");
    let fmt = |z: Complex64| hahnlab::orthogonality::format_complex(z);
    let summary = GramSummary {
        n: args.n,
        alpha: args.alpha.clone(),
        beta: args.beta.clone(),
        a: args.a.clone(),
        b: args.b.clone(),
        status: report.status,
        expected_diagonal: g.expected_diagonal.iter().map(|&z| fmt(z)).collect(),
        max_offdiag_abs: g.max_offdiag_abs,
        max_offdiag_normalized: g.max_offdiag_normalized,
        max_diag_rel_err: g.max_diag_rel_err,
        parity_zeroed: g.parity_zeroed,
        report: &report,
    };
    write_json(&summary_path, &summary)?;
    let mut params = BTreeMap::new();
    for (k, v) in [("n", args.n.to_string()), ("alpha", args.alpha.clone()), ("beta", args.beta.clone()), ("a", args.a.clone()), ("b", args.b.clone())] {
        params.insert(k.to_string(), v);
    }
    params.insert("rel_tol".to_string(), format!("{:e}", cfg.rel_tol));
    params.insert("parallel".to_string(), opts.parallel.to_string());
    let manifest = RunManifest::new("gram", params, true, &[args.out.as_path(), summary_path.as_path()]);
    write_json(&sibling(&args.out, ".manifest.json"), &manifest)?;
    println!(
        "{} gram n={} max_diag_rel_err {:.2e} max_offdiag_normalized {:.2e}",
        status_word(report.status),
        args.n,
        g.max_diag_rel_err,
        g.max_offdiag_normalized
    );
    Ok(if report.passed() { 0 } else { EXIT_FAIL })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval(a) => eval(a).map(|v| {
            println!("{v}");
            0
        }),
        Command::Verify(a) => verify(a),
        Command::Gram(a) => gram(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("hahnlab: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

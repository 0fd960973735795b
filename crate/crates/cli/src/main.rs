//! Command-line surface for the q-Bessel library: evaluate functions, run
//! certificate checks, scan parameter regions to CSV, and run the oracle
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 validation, 3
//! non-convergence, 4 I/O.

// range guards are written as !(lo <= x && x <= hi) on purpose: NaN must fail
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;
mod scan;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use qbessel::{eval_jackson, series_h, suite, Error, FamilyKind, QDomain, Tolerance};

use output::{fmt_sig, CheckOutput, EvalOutput};

#[derive(Debug, Parser)]
#[command(
    name = "qbessel",
    about = "Jackson q-Bessel functions with certified geometric checks",
    version
)]
struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Optional key=value config file overriding tolerance defaults
    /// (keys: term_cutoff, max_terms). Flags win over config.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Series term cutoff (default 1e-16).
    #[arg(long, global = true, value_name = "REAL")]
    tol: Option<f64>,

    /// Maximum number of series terms (default 512).
    #[arg(long, global = true, value_name = "INT")]
    max_terms: Option<usize>,

    /// Worker threads for scan/verify (default: all cores). Output is
    /// byte-identical for any worker count.
    #[arg(long, global = true, value_name = "INT")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Second,
    Third,
}

impl From<KindArg> for FamilyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Second => FamilyKind::Second,
            KindArg::Third => FamilyKind::Third,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WhichArg {
    /// The raw q-Bessel function of the selected family.
    Raw,
    /// The normalized series h(z) = z + sum b_n z^n.
    Normalized,
}

#[derive(Debug, Args)]
struct DomainArgs {
    /// Family: second or third.
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Deformation parameter, in (0,1).
    #[arg(long)]
    q: f64,
    /// Order, > -1.
    #[arg(long)]
    nu: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the raw or normalized function at a point.
    Eval {
        #[command(flatten)]
        domain: DomainArgs,
        /// Real part of z.
        #[arg(long)]
        z: f64,
        /// Imaginary part of z.
        #[arg(long, default_value_t = 0.0)]
        z_imag: f64,
        /// Which function to evaluate.
        #[arg(long, value_enum, default_value = "normalized")]
        which: WhichArg,
    },
    /// Print every certificate at the given order.
    Check {
        #[command(flatten)]
        domain: DomainArgs,
        /// Order alpha, in [0,1).
        #[arg(long)]
        alpha: f64,
        /// Order beta (< 1) for the derivative-class convolution row.
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
    },
    /// Scan a (q, nu) rectangle and write one CSV row per grid point.
    Scan {
        /// Family for the threshold and Hardy columns.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// q range as lo:hi (inclusive, inside (0,1)).
        #[arg(long, value_name = "LO:HI")]
        q: String,
        /// nu range as lo:hi (inclusive, lo > -1).
        #[arg(long, value_name = "LO:HI")]
        nu: String,
        /// Grid points per axis (>= 2); the scan emits steps^2 rows.
        #[arg(long)]
        steps: usize,
        /// Output CSV path.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
    /// Run the oracle verification suite.
    Verify {
        /// RNG seed for the randomized families.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Sample count per randomized family (>= 1).
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

enum Failure {
    Validation(String),
    NonConvergence(String),
    Io(String),
    Verification,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::NonConvergence(_) => 3,
            Failure::Io(_) => 4,
            Failure::Verification => 1,
        }
    }

    fn message(&self) -> Option<&str> {
        match self {
            Failure::Validation(m) | Failure::NonConvergence(m) | Failure::Io(m) => Some(m),
            Failure::Verification => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. } => Failure::NonConvergence(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(m) = f.message() {
                eprintln!("error: {m}");
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let tol = resolve_tolerance(&cli)?;
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(Failure::Validation("workers must be >= 1".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Failure::Validation(e.to_string()))?;
        pool.install(|| dispatch(&cli, &tol))
    } else {
        dispatch(&cli, &tol)
    }
}

fn dispatch(cli: &Cli, tol: &Tolerance) -> Result<(), Failure> {
    match &cli.command {
        Command::Eval {
            domain,
            z,
            z_imag,
            which,
        } => cmd_eval(domain, *z, *z_imag, *which, tol, cli.json),
        Command::Check {
            domain,
            alpha,
            beta,
        } => cmd_check(domain, *alpha, *beta, tol, cli.json),
        Command::Scan {
            kind,
            q,
            nu,
            steps,
            out,
        } => scan::cmd_scan((*kind).into(), q, nu, *steps, out, tol, cli.json),
        Command::Verify { seed, samples } => cmd_verify(*seed, *samples, cli.json),
    }
}

fn resolve_tolerance(cli: &Cli) -> Result<Tolerance, Failure> {
    let mut cutoff = 1e-16;
    let mut max_terms = 512usize;
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read config {}: {e}", path.display())))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Failure::Validation(format!(
                    "config line {} is not key=value: {line}",
                    lineno + 1
                )));
            };
            match key.trim() {
                "term_cutoff" => {
                    cutoff = value.trim().parse().map_err(|e| {
                        Failure::Validation(format!("bad term_cutoff in config: {e}"))
                    })?;
                }
                "max_terms" => {
                    max_terms = value.trim().parse().map_err(|e| {
                        Failure::Validation(format!("bad max_terms in config: {e}"))
                    })?;
                }
                other => {
                    return Err(Failure::Validation(format!(
                        "unknown config key: {other}"
                    )));
                }
            }
        }
    }
    if let Some(t) = cli.tol {
        cutoff = t;
    }
    if let Some(m) = cli.max_terms {
        max_terms = m;
    }
    Tolerance::new(cutoff, max_terms).map_err(Into::into)
}

fn parse_domain(args: &DomainArgs) -> Result<QDomain, Failure> {
    QDomain::new(args.q, args.nu).map_err(|_| {
        Failure::Validation(if !(args.q > 0.0 && args.q < 1.0) {
            format!("q must lie in (0,1), got {}", args.q)
        } else {
            format!("nu must be > -1, got {}", args.nu)
        })
    })
}

fn cmd_eval(
    domain: &DomainArgs,
    z_re: f64,
    z_im: f64,
    which: WhichArg,
    tol: &Tolerance,
    json: bool,
) -> Result<(), Failure> {
    let qd = parse_domain(domain)?;
    let kind: FamilyKind = domain.kind.into();
    let z = Complex64::new(z_re, z_im);
    let (value, error_bound, which_name) = match which {
        WhichArg::Raw => {
            let v = eval_jackson(kind, &qd, z, tol)?;
            (v.value, v.error_bound, "raw")
        }
        WhichArg::Normalized => {
            if z.norm() > 1.0 {
                return Err(Failure::Validation(format!(
                    "normalized evaluation requires |z| <= 1, got |z| = {}",
                    z.norm()
                )));
            }
            let s = series_h(kind, &qd, tol)?;
            (s.eval(z), s.tail_sum(), "normalized")
        }
    };
    let out = EvalOutput {
        command: "eval",
        kind: kind.label(),
        q: qd.q(),
        nu: qd.nu(),
        z: [z_re, z_im],
        which: which_name,
        value: [value.re, value.im],
        error_bound,
    };
    if json {
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!(
            "{}(q = {}, nu = {}) at z = {} + {}i [{}]",
            kind.label(),
            fmt_sig(qd.q()),
            fmt_sig(qd.nu()),
            fmt_sig(z_re),
            fmt_sig(z_im),
            which_name
        );
        println!("value = {} + {}i", fmt_sig(value.re), fmt_sig(value.im));
        println!("error bound = {}", fmt_sig(error_bound));
    }
    Ok(())
}

fn cmd_check(
    domain: &DomainArgs,
    alpha: f64,
    beta: f64,
    tol: &Tolerance,
    json: bool,
) -> Result<(), Failure> {
    let qd = parse_domain(domain)?;
    let kind: FamilyKind = domain.kind.into();
    if !(0.0..1.0).contains(&alpha) {
        return Err(Failure::Validation(format!(
            "alpha must lie in [0,1), got {alpha}"
        )));
    }
    if !(beta < 1.0) {
        return Err(Failure::Validation(format!("beta must be < 1, got {beta}")));
    }
    let _ = tol;
    let out = CheckOutput::collect(kind, &qd, alpha, beta);
    if json {
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        out.print_table();
    }
    Ok(())
}

fn cmd_verify(seed: u64, samples: usize, json: bool) -> Result<(), Failure> {
    if samples < 1 {
        return Err(Failure::Validation(format!(
            "samples must be >= 1, got {samples}"
        )));
    }
    let cfg = suite::SuiteConfig::new(seed, samples);
    let report = suite::run_suite(&cfg);
    if json {
        let value = serde_json::json!({
            "command": "verify",
            "seed": report.seed,
            "samples": report.samples,
            "families": report.outcomes,
            "all_passed": report.all_gating_passed(),
        });
        println!("{value}");
    } else {
        for o in &report.outcomes {
            let status = if o.passed() {
                "PASS"
            } else if o.gating {
                "FAIL"
            } else {
                "WARN"
            };
            println!(
                "[{status}] {}: checked={}, violations={} ({})",
                o.name, o.checked, o.violations, o.detail
            );
        }
        if report.all_gating_passed() {
            println!("all gating families passed");
        } else {
            println!("verification FAILED");
        }
    }
    if report.all_gating_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

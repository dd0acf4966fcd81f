//! Command-line frontend: `telescope`, `invert`, `verify` and `bench`.
//!
//! Exit codes: 0 success, 1 `verify` rejected the telescoper, 2 the library
//! rejected the input, 3 a verification failed, 64 usage error, 65 bad
//! expression or data file, 66 unreadable input file, 74 write failure.

pub mod expr;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mixedct::arith::{Field, NRat, XRat};
use mixedct::inversion::{bench_family, check_recurrence, invert_recurrence, series_reversion, write_csv};
use mixedct::telescoping::{
    build_term, ensure_minimal, mixed_ct, verify_telescoper, Certificate, HyperTerm, MinimalityStatus,
    MixedCtOptions, Telescoper,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use expr::{format_expr, lower_nrat, lower_qrat, lower_xpoly, lower_xrat, parse_expr, LowerError, ParseError, Value};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("--{flag}: {err}")]
    Parse { flag: String, err: ParseError },
    #[error("--{flag}: {err}")]
    Lower { flag: String, err: LowerError },
    #[error("{0}")]
    Data(String),
    #[error("cannot read {path}: {err}")]
    Input { path: PathBuf, err: std::io::Error },
    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
    #[error("{0}")]
    Library(#[from] mixedct::Error),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("telescoper and certificate do not satisfy the identity")]
    Rejected,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Rejected => 1,
            CliError::Library(mixedct::Error::VerificationFailed(_)) => 3,
            CliError::Library(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Usage(_) => 64,
            CliError::Parse { .. } | CliError::Lower { .. } | CliError::Data(_) => 65,
            CliError::Input { .. } => 66,
            CliError::Output(_) => 74,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "mixedct", version, about = "Creative telescoping for hypergeometric-hyperexponential terms")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Telescoper of F_n = P(n,x) H(x)^n exp(∫ S/T)
    Telescope(TelescopeArgs),
    /// Recurrence for the Taylor coefficients of the compositional inverse of f
    Invert(InvertArgs),
    /// Check a telescoper and certificate against a term
    Verify(VerifyArgs),
    /// Inversion benchmark on random f_k = x P_k^2 / Q_k, as CSV
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct TermArgs {
    /// Polynomial prefactor P(n, x)
    #[arg(long = "P", allow_hyphen_values = true)]
    p: String,
    /// Hypergeometric part H(x)
    #[arg(long = "H", allow_hyphen_values = true)]
    h: String,
    /// Logarithmic derivative S/T of the hyperexponential part
    #[arg(long = "ST", allow_hyphen_values = true, default_value = "0")]
    st: String,
    /// Exponent g(x); adds g' to S/T
    #[arg(long = "exp", allow_hyphen_values = true)]
    exp: Option<String>,
    /// Rewrite the term so that S/T has no positive integer residue first
    #[arg(long = "ensure-minimal")]
    ensure_minimal: bool,
}

#[derive(Args, Debug)]
struct TelescopeArgs {
    #[command(flatten)]
    term: TermArgs,
    #[arg(long)]
    json: bool,
    /// Also compute and print the certificate
    #[arg(long)]
    certificate: bool,
    /// Search for the order by doubling and bisection
    #[arg(long)]
    dichotomic: bool,
}

#[derive(Args, Debug)]
struct InvertArgs {
    #[arg(long = "f", allow_hyphen_values = true)]
    f: String,
    /// Number of series terms to check the recurrence against (0 skips)
    #[arg(long, default_value_t = 200)]
    verify: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    term: TermArgs,
    /// JSON file with the `coefficients` of the telescoper
    #[arg(long)]
    telescoper: PathBuf,
    /// Certificate, as a JSON file with a `certificate` field or as plain text
    #[arg(long)]
    certificate: PathBuf,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    kmin: usize,
    #[arg(long)]
    kmax: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long = "coeff-bound", default_value_t = 100)]
    coeff_bound: i64,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    csv: Option<PathBuf>,
}

/// Machine-readable result of `telescope` and `invert`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub order: usize,
    /// Cleared coefficients of `S_n^0, …, S_n^r`.
    pub coefficients: Vec<String>,
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<String>,
    pub wall_seconds: f64,
}

#[derive(Deserialize)]
struct TelescoperFile {
    coefficients: Vec<String>,
    #[serde(default)]
    order: Option<usize>,
}

fn parse(flag: &str, src: &str) -> CliResult<expr::Expr> {
    parse_expr(src).map_err(|err| CliError::Parse { flag: flag.into(), err })
}

fn lowered<T>(flag: &str, src: &str, f: fn(&expr::Expr) -> Result<T, LowerError>) -> CliResult<T> {
    f(&parse(flag, src)?).map_err(|err| CliError::Lower { flag: flag.into(), err })
}

fn term_from(args: &TermArgs, err: &mut dyn Write) -> CliResult<HyperTerm> {
    let p = lowered("P", &args.p, lower_xpoly)?;
    let h = lowered("H", &args.h, lower_qrat)?;
    let mut st = lowered("ST", &args.st, lower_qrat)?;
    if let Some(g) = &args.exp {
        st = st.add(&lowered("exp", g, lower_qrat)?.derivative());
    }
    let t = build_term(p, h, st)?;
    if !args.ensure_minimal {
        return Ok(t);
    }
    let (t, status) = ensure_minimal(&t);
    match status {
        MinimalityStatus::Minimal => {}
        MinimalityStatus::Rewritten => writeln!(
            err,
            "note: term rewritten to P = {}, S/T = {}",
            format_expr(&Value::XPoly(t.p().clone())),
            format_expr(&Value::QRat(t.st().clone()))
        )?,
        MinimalityStatus::Unverified => writeln!(err, "warning: minimality of the decomposition could not be checked")?,
    }
    Ok(t)
}

fn cleared_strings(l: &Telescoper) -> Vec<String> {
    l.cleared().iter().map(|c| format_expr(&Value::NRat(NRat::from_zpoly(c.clone())))).collect()
}

fn emit(out: &mut dyn Write, rep: &OperatorJson, json: bool) -> CliResult<()> {
    if json {
        serde_json::to_writer(&mut *out, rep).map_err(std::io::Error::from)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "order: {}", rep.order)?;
    writeln!(out, "coefficients: [{}]", rep.coefficients.join(", "))?;
    writeln!(out, "degree: {}", rep.degree)?;
    if let Some(c) = &rep.certificate {
        writeln!(out, "certificate: {c}")?;
    }
    writeln!(out, "wall_seconds: {:.3}", rep.wall_seconds)?;
    Ok(())
}

fn telescope(a: &TelescopeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let t = term_from(&a.term, err)?;
    let start = Instant::now();
    let opts = MixedCtOptions { certificate: a.certificate, dichotomic: a.dichotomic, ..Default::default() };
    let res = mixed_ct(&t, opts)?;
    let wall_seconds = start.elapsed().as_secs_f64();
    let l = &res.telescoper;
    let rep = OperatorJson {
        order: l.order(),
        coefficients: cleared_strings(l),
        degree: l.degree(),
        certificate: res.certificate.map(|c| format_expr(&Value::XRat(c.q))),
        wall_seconds,
    };
    emit(out, &rep, a.json)
}

fn invert(a: &InvertArgs, out: &mut dyn Write) -> CliResult<()> {
    let f = lowered("f", &a.f, lower_qrat)?;
    let start = Instant::now();
    let l = invert_recurrence(&f)?;
    let wall_seconds = start.elapsed().as_secs_f64();
    if a.verify > 0 {
        let r = l.order();
        if a.verify < r + 2 {
            return Err(CliError::Usage(format!("--verify needs at least {} terms for an order-{r} recurrence", r + 2)));
        }
        let u = series_reversion(&f, a.verify)?;
        if !check_recurrence(&u, &l, 1, a.verify - 1 - r) {
            return Err(CliError::Verification(format!("recurrence does not annihilate the first {} coefficients", a.verify)));
        }
    }
    let rep = OperatorJson {
        order: l.order(),
        coefficients: cleared_strings(&l),
        degree: l.degree(),
        certificate: None,
        wall_seconds,
    };
    emit(out, &rep, a.json)
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|err| CliError::Input { path: path.to_path_buf(), err })
}

fn load_telescoper(path: &Path) -> CliResult<Telescoper> {
    let file: TelescoperFile = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    if file.coefficients.is_empty() {
        return Err(CliError::Data(format!("{}: no coefficients", path.display())));
    }
    if file.order.is_some_and(|r| r + 1 != file.coefficients.len()) {
        return Err(CliError::Data(format!("{}: order does not match the coefficient count", path.display())));
    }
    let v = file
        .coefficients
        .iter()
        .map(|s| lowered("telescoper", s, lower_nrat))
        .collect::<CliResult<Vec<_>>>()?;
    let lead = v.last().unwrap();
    if lead.is_zero() {
        return Err(CliError::Data(format!("{}: leading coefficient is zero", path.display())));
    }
    let lead = lead.inv();
    Ok(Telescoper::from_coeffs(v[..v.len() - 1].iter().map(|c| c.mul(&lead).neg()).collect()))
}

fn load_certificate(path: &Path) -> CliResult<XRat> {
    let text = read(path)?;
    let src = match serde_json::from_str::<serde_json::Value>(&text) {
        Ok(serde_json::Value::Object(m)) => match m.get("certificate") {
            Some(serde_json::Value::String(s)) => s.clone(),
            _ => return Err(CliError::Data(format!("{}: no `certificate` string", path.display()))),
        },
        Ok(serde_json::Value::String(s)) => s,
        _ => text,
    };
    lowered("certificate", src.trim(), lower_xrat)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let t = term_from(&a.term, err)?;
    let l = load_telescoper(&a.telescoper)?;
    let q = load_certificate(&a.certificate)?;
    if verify_telescoper(&t, &l, &Certificate { q }) {
        writeln!(out, "TRUE")?;
        Ok(())
    } else {
        writeln!(out, "FALSE")?;
        Err(CliError::Rejected)
    }
}

fn bench(a: &BenchArgs, out: &mut dyn Write) -> CliResult<()> {
    let rows = bench_family(a.kmin, a.kmax, a.seed, a.coeff_bound)?;
    match &a.csv {
        Some(path) => write_csv(&rows, std::fs::File::create(path)?)?,
        None => write_csv(&rows, &mut *out)?,
    }
    Ok(())
}

/// Runs one command; returns the process exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let res = match &cli.cmd {
        Command::Telescope(a) => telescope(a, out, err),
        Command::Invert(a) => invert(a, out),
        Command::Verify(a) => verify(a, out, err),
        Command::Bench(a) => bench(a, out),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(e, CliError::Rejected) {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

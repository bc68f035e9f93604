//! coposit: exact copositivity checks and certificates for symmetric integer
//! matrices.
//!
//! Exit codes: 0 copositive / valid certificate, 1 not copositive / invalid
//! certificate, 2 usage or parse error, 3 certificate requested for a
//! copositive matrix.

mod matrix_file;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::Zero;

use copositive::certificate::{certify_from_minimum, verify_certificate, Scheme};
use copositive::encoding::encoding_length;
use copositive::instances::{adversarial_matrix, embed, random_instance, InstanceKind};
use copositive::lcp::{solve_box_qp_lcp_with_limit, MinimizationResult};
use copositive::oracle::face_enumerate_min_with_limit;
use copositive::rational::format_rational;
use copositive::SymmetricIntMatrix;

use report::ReportDocument;

const EXIT_COPOSITIVE: u8 = 0;
const EXIT_NOT_COPOSITIVE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_NO_CERTIFICATE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "coposit",
    version,
    about = "Exact copositivity checks and certificates for symmetric integer matrices",
    long_about = "Decides whether a symmetric integer matrix M satisfies x'Mx >= 0 for all\n\
                  non-negative x, using exact rational arithmetic throughout. For matrices\n\
                  that are not copositive it constructs a short non-negative rational\n\
                  certificate y with y'My < 0 and audits its bit size against the\n\
                  17*L^(3/2) and 10*L^(3/2) bounds, where L is the binary encoding length\n\
                  of the matrix."
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Decide copositivity; exit 0 when copositive, 1 when not
    Check {
        /// Matrix file
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Construct a certificate of non-copositivity with a full bound audit
    Certify {
        /// Matrix file
        file: PathBuf,
        /// Rounding grid for the exported certificate
        #[arg(long, value_enum, default_value = "fixed")]
        scheme: SchemeArg,
        /// Also write the certificate vector, one "p/q" per line
        #[arg(long, value_name = "FILE")]
        cert_out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a claimed certificate vector against a matrix
    Verify {
        /// Matrix file
        matrix: PathBuf,
        /// Vector file, one "p/q" per line
        vector: PathBuf,
    },
    /// Write instance files
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Args)]
struct SolverArgs {
    /// Minimizer to run
    #[arg(long, value_enum, default_value = "lcp")]
    method: MethodArg,
    /// Run both minimizers and require exact agreement
    #[arg(long)]
    paranoid: bool,
    /// Override the dimension guard of both minimizers
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Lcp,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Fixed,
    Dyadic,
}

impl From<SchemeArg> for Scheme {
    fn from(arg: SchemeArg) -> Self {
        match arg {
            SchemeArg::Fixed => Scheme::FixedDenominator,
            SchemeArg::Dyadic => Scheme::Dyadic,
        }
    }
}

#[derive(Subcommand)]
enum GenFamily {
    /// The hard 2x2 family M(k) = (2^{2k+2}, -2^{k+2}; -2^{k+2}, 3)
    RemarkB {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: GenOut,
    },
    /// M(k) embedded as the top-left block of an n x n zero matrix
    Embed {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Seeded random instance
    Random {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 9)]
        entry_bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOut,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Symmetric,
    Nonnegative,
    Psd,
}

impl From<KindArg> for InstanceKind {
    fn from(arg: KindArg) -> Self {
        match arg {
            KindArg::Symmetric => InstanceKind::Symmetric,
            KindArg::Nonnegative => InstanceKind::Nonnegative,
            KindArg::Psd => InstanceKind::PositiveSemidefinite,
        }
    }
}

#[derive(Args)]
struct GenOut {
    /// Output path (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also print strict and nominal encoding-length lines
    #[arg(long)]
    audit: bool,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Commands::Check {
            file,
            solver,
            output,
        } => run_check(&file, &solver, &output),
        Commands::Certify {
            file,
            scheme,
            cert_out,
            solver,
            output,
        } => run_certify(&file, scheme.into(), cert_out.as_deref(), &solver, &output),
        Commands::Verify { matrix, vector } => run_verify(&matrix, &vector),
        Commands::Gen { family } => run_gen(family),
    }
}

fn read_matrix(path: &Path) -> Result<SymmetricIntMatrix> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("failed to read {}", path.display()))?;
    matrix_file::parse_matrix(&text)
        .with_context(|| format!("failed to parse matrix file {}", path.display()))
}

/// Runs the requested minimizer(s); under --paranoid both run and must agree
/// exactly on the minimum.
fn solve(m: &SymmetricIntMatrix, solver: &SolverArgs) -> Result<MinimizationResult> {
    let lcp_limit = solver
        .max_n
        .unwrap_or(copositive::lcp::DEFAULT_ENUMERATION_LIMIT);
    let face_limit = solver
        .max_n
        .unwrap_or(copositive::oracle::DEFAULT_FACE_LIMIT);
    let primary = match solver.method {
        MethodArg::Lcp => solve_box_qp_lcp_with_limit(m, lcp_limit)?,
        MethodArg::Oracle => face_enumerate_min_with_limit(m, face_limit)?,
    };
    if solver.paranoid {
        let secondary = match solver.method {
            MethodArg::Lcp => face_enumerate_min_with_limit(m, face_limit)?,
            MethodArg::Oracle => solve_box_qp_lcp_with_limit(m, lcp_limit)?,
        };
        if primary.gamma != secondary.gamma {
            bail!(
                "minimizers disagree: {} found gamma = {}, {} found gamma = {}",
                primary.method,
                format_rational(&primary.gamma),
                secondary.method,
                format_rational(&secondary.gamma)
            );
        }
    }
    Ok(primary)
}

fn emit(report: &ReportDocument, output: &OutputArgs) -> Result<()> {
    match output.format {
        FormatArg::Plain => print!("{}", report.to_plain()),
        FormatArg::Json => println!("{}", serde_json::to_string_pretty(report)?),
    }
    Ok(())
}

fn run_check(path: &Path, solver: &SolverArgs, output: &OutputArgs) -> Result<ExitCode> {
    let matrix = read_matrix(path)?;
    let started = Instant::now();
    let minimum = solve(&matrix, solver)?;
    let timing_ms = started.elapsed().as_millis();
    let stats = encoding_length(&matrix);
    let report = ReportDocument::for_check(&minimum, &stats, timing_ms);
    emit(&report, output)?;
    Ok(ExitCode::from(if minimum.gamma.is_zero() {
        EXIT_COPOSITIVE
    } else {
        EXIT_NOT_COPOSITIVE
    }))
}

fn run_certify(
    path: &Path,
    scheme: Scheme,
    cert_out: Option<&Path>,
    solver: &SolverArgs,
    output: &OutputArgs,
) -> Result<ExitCode> {
    let matrix = read_matrix(path)?;
    let stats = encoding_length(&matrix);
    if stats.max_abs == num::BigInt::ZERO {
        eprintln!("the zero matrix is copositive; no certificate exists");
        return Ok(ExitCode::from(EXIT_NO_CERTIFICATE));
    }
    let started = Instant::now();
    let minimum = solve(&matrix, solver)?;
    if minimum.gamma.is_zero() {
        eprintln!("matrix is copositive; no certificate exists");
        return Ok(ExitCode::from(EXIT_NO_CERTIFICATE));
    }
    // audit both grids, export the requested one
    let fixed = certify_from_minimum(&matrix, &minimum, Scheme::FixedDenominator)?;
    let dyadic = certify_from_minimum(&matrix, &minimum, Scheme::Dyadic)?;
    let timing_ms = started.elapsed().as_millis();
    let selected = match scheme {
        Scheme::FixedDenominator => &fixed,
        Scheme::Dyadic => &dyadic,
    };
    let report = ReportDocument::for_certify(&minimum, selected, &fixed, &dyadic, timing_ms);
    emit(&report, output)?;
    if let Some(dest) = cert_out {
        std::fs::write(dest, matrix_file::serialize_vector(&selected.y))
            .with_context(|| format!("failed to write {}", dest.display()))?;
    }
    Ok(ExitCode::from(EXIT_NOT_COPOSITIVE))
}

fn run_verify(matrix_path: &Path, vector_path: &Path) -> Result<ExitCode> {
    let matrix = read_matrix(matrix_path)?;
    let text = std::fs::read_to_string(vector_path)
        .with_context(|| format!("failed to read {}", vector_path.display()))?;
    let y = matrix_file::parse_vector(&text)
        .with_context(|| format!("failed to parse vector file {}", vector_path.display()))?;
    let outcome = verify_certificate(&matrix, &y)?;
    println!("value: {}", format_rational(&outcome.value));
    if outcome.valid {
        println!("verdict: valid");
        Ok(ExitCode::from(EXIT_COPOSITIVE))
    } else {
        match outcome.failure {
            Some(reason) => println!("verdict: invalid ({reason})"),
            None => println!("verdict: invalid"),
        }
        Ok(ExitCode::from(EXIT_NOT_COPOSITIVE))
    }
}

fn run_gen(family: GenFamily) -> Result<ExitCode> {
    let (matrix, nominal_bits, out) = match family {
        GenFamily::RemarkB { k, out } => {
            if k < 1 {
                bail!("k must be at least 1");
            }
            let inst = copositive::instances::AdversarialInstance::new(k);
            (inst.matrix, Some(inst.nominal_bits), out)
        }
        GenFamily::Embed { k, n, out } => {
            if k < 1 {
                bail!("k must be at least 1");
            }
            if n < 2 {
                bail!("embedding dimension must be at least 2");
            }
            let _ = embed(&adversarial_matrix(k), n)?; // surface dimension errors early
            let inst = copositive::instances::AdversarialInstance::embedded(k, n)?;
            (inst.matrix, Some(inst.nominal_bits), out)
        }
        GenFamily::Random {
            kind,
            n,
            entry_bound,
            seed,
            out,
        } => {
            let matrix = random_instance(kind.into(), n, entry_bound, seed)?;
            (matrix, None, out)
        }
    };
    let serialized = matrix_file::serialize_matrix(&matrix);
    match &out.output {
        Some(dest) => std::fs::write(dest, &serialized)
            .with_context(|| format!("failed to write {}", dest.display()))?,
        None => print!("{serialized}"),
    }
    if out.audit {
        let stats = encoding_length(&matrix);
        println!("strict-encoding-bits: {}", stats.bits);
        if let Some(nominal) = nominal_bits {
            println!("nominal-encoding-bits: {nominal}");
        }
    }
    Ok(ExitCode::from(EXIT_COPOSITIVE))
}

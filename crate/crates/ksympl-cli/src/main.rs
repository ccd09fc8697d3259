//! Batch frontend for the `ksympl` library.
//!
//! Five subcommands tie the pipeline together for reproducible runs:
//! `verify` decides whether a span of two-forms is k-symplectic,
//! `construct` builds one from a negative-definite Clifford signature,
//! `classify` names Clifford algebras and their minimal modules,
//! `obstruct` runs the torus dimension obstructions, and `extract`
//! recovers `(q, c)` with `∫ η^{2n} = c·q(η,η)ⁿ` from intersection data.
//!
//! Exit codes: 0 for success or an affirmative verdict, 1 for a negative
//! verdict, 2 for usage or input errors. Identical (command, input,
//! backend, seed, samples) runs produce byte-identical output.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use ksympl::clifford::{classify, minimal_module_dim, ScalarField, Signature};
use ksympl::hk::{fujiki_extract, ogrady_verdict};
use ksympl::ksymplectic::{verify_ksymplectic_with, VerifyOptions, VerifyScalar};
use ksympl::repr::construct_span;
use ksympl::scalar::RealScalar;
use ksympl::wire::{self, WireError, WireScalar};

#[derive(Parser)]
#[command(name = "ksympl", version, about = "k-symplectic spans, Clifford classification, and hyperkähler dimension obstructions", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a span of two-forms is k-symplectic (exit 0 yes, 1 no)
    Verify(VerifyArgs),
    /// Emit a k-symplectic span built from a negative-definite Clifford signature
    Construct(ConstructArgs),
    /// Classify Cl(r,s) or its even part and report the minimal module dimension
    Classify(ClassifyArgs),
    /// Run the torus dimension obstructions (exit 0 obstructed, 1 not obstructed)
    Obstruct(ObstructArgs),
    /// Recover (q, c) with ∫η^(2n) = c·q(η,η)^n from an intersection model
    /// (exit 1 when the polynomial is not a power or the sign is unresolved)
    Extract(ExtractArgs),
}

/// Arithmetic backend for parsing and computing.
#[derive(Copy, Clone, Debug, ValueEnum)]
enum Backend {
    /// Arbitrary-precision rational arithmetic
    Exact,
    /// Double-precision floating point
    #[value(name = "float64")]
    Float64,
}

#[derive(Args)]
struct IoArgs {
    /// Input document path, or - for standard input
    #[arg(long, default_value = "-")]
    input: String,
    /// Output path, or - for standard output
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args)]
struct BackendArg {
    /// Arithmetic backend
    #[arg(long, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    io: IoArgs,
    #[command(flatten)]
    backend: BackendArg,
    /// Null-cone samples per rank check
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Seed for the deterministic sample stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ConstructArgs {
    /// Number of generators squaring to −1 (the k of the resulting span)
    #[arg(long)]
    minuses: usize,
    /// Generators squaring to +1; the embedding requires 0
    #[arg(long, default_value_t = 0)]
    pluses: usize,
    /// Copies of the minimal module to stack
    #[arg(long, default_value_t = 1)]
    copies: usize,
    #[command(flatten)]
    backend: BackendArg,
    /// Output path, or - for standard output
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Generators squaring to −1
    #[arg(long)]
    minuses: usize,
    /// Generators squaring to +1
    #[arg(long, default_value_t = 0)]
    pluses: usize,
    /// Classify over the complex numbers instead of the reals
    #[arg(long)]
    complex: bool,
    /// Classify the even subalgebra
    #[arg(long)]
    even: bool,
    /// Output path, or - for standard output
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args)]
struct ObstructArgs {
    /// Second Betti number of the hyperkähler manifold
    #[arg(long)]
    b2: usize,
    /// Complex dimension of the manifold (even, at least 2)
    #[arg(long)]
    dim_c: usize,
    /// Output path, or - for standard output
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args)]
struct ExtractArgs {
    #[command(flatten)]
    io: IoArgs,
    #[command(flatten)]
    backend: BackendArg,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },
    #[error(transparent)]
    Malformed(#[from] WireError),
    #[error("{0}")]
    Usage(String),
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Obstruct(args) => cmd_obstruct(args),
        Command::Extract(args) => cmd_extract(args),
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let text = read_input(&args.io.input)?;
    let document = wire::parse_document(&text)?;
    let options = VerifyOptions {
        samples: args.samples,
        seed: args.seed,
    };
    let (value, accepted) = match (args.backend.backend, wire::scalars_tag(&document)?) {
        (Backend::Exact, "real") => verify_document::<BigRational>(&document, options)?,
        (Backend::Exact, "complex") => {
            verify_document::<Complex<BigRational>>(&document, options)?
        }
        (Backend::Float64, "real") => verify_document::<f64>(&document, options)?,
        (Backend::Float64, "complex") => {
            verify_document::<Complex<f64>>(&document, options)?
        }
        (_, other) => {
            return Err(WireError {
                path: "$.scalars".to_string(),
                message: format!("expected \"real\" or \"complex\", got {other:?}"),
            }
            .into())
        }
    };
    write_output(&args.io.output, &wire::to_output_string(&value))?;
    Ok(verdict_code(accepted))
}

fn verify_document<S>(
    document: &Value,
    options: VerifyOptions,
) -> Result<(Value, bool), CliError>
where
    S: VerifyScalar + WireScalar,
    S::C: WireScalar,
{
    let span = wire::parse_two_form_span::<S>(document)?;
    let report = verify_ksymplectic_with(&span, options);
    Ok((wire::report_to_value(&report), report.is_k_symplectic))
}

fn cmd_construct(args: ConstructArgs) -> Result<ExitCode, CliError> {
    if args.pluses != 0 {
        return Err(CliError::Usage(format!(
            "--pluses {} is unsupported: the embedding of forms exists for \
             negative-definite signatures (all generators squaring to −1); \
             use --pluses 0",
            args.pluses
        )));
    }
    if args.minuses == 0 {
        return Err(CliError::Usage(
            "need at least one generator: --minuses must be ≥ 1".to_string(),
        ));
    }
    if args.copies == 0 {
        return Err(CliError::Usage(
            "need at least one module copy: --copies must be ≥ 1".to_string(),
        ));
    }
    let value = match args.backend.backend {
        Backend::Exact => {
            let (_, _, span) = construct_span::<BigRational>(args.minuses, args.copies);
            wire::span_to_value(&span)
        }
        Backend::Float64 => {
            let (_, _, span) = construct_span::<f64>(args.minuses, args.copies);
            wire::span_to_value(&span)
        }
    };
    write_output(&args.output, &wire::to_output_string(&value))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, CliError> {
    let sig = Signature::new(args.minuses, args.pluses);
    let scalars = if args.complex {
        ScalarField::Complex
    } else {
        ScalarField::Real
    };
    let description = classify(sig, scalars, args.even);
    let minimal = minimal_module_dim(sig, scalars, args.even);
    let value = json!({
        "signature": sig,
        "scalars": if args.complex { "complex" } else { "real" },
        "even_part": args.even,
        "algebra": description,
        "minimal_module_dim": minimal.to_string(),
    });
    write_output(&args.output, &wire::to_output_string(&value))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_obstruct(args: ObstructArgs) -> Result<ExitCode, CliError> {
    if args.b2 < 4 {
        return Err(CliError::Usage(
            "--b2 must be at least 4 for the Clifford-module route".to_string(),
        ));
    }
    if args.dim_c < 2 || !args.dim_c.is_multiple_of(2) {
        return Err(CliError::Usage(
            "--dim-c must be an even integer ≥ 2 (hyperkähler manifolds have \
             even complex dimension)"
                .to_string(),
        ));
    }
    let verdict = ogrady_verdict(args.b2, args.dim_c);
    let value = wire::obstruction_verdict_to_value(&verdict);
    write_output(&args.output, &wire::to_output_string(&value))?;
    Ok(verdict_code(!verdict.torus_possible))
}

fn cmd_extract(args: ExtractArgs) -> Result<ExitCode, CliError> {
    let text = read_input(&args.io.input)?;
    let document = wire::parse_document(&text)?;
    match args.backend.backend {
        Backend::Exact => extract_document::<BigRational>(&document, &args.io.output),
        Backend::Float64 => extract_document::<f64>(&document, &args.io.output),
    }
}

fn extract_document<S>(document: &Value, output: &str) -> Result<ExitCode, CliError>
where
    S: RealScalar + VerifyScalar + WireScalar,
{
    let model = wire::parse_intersection_model::<S>(document)?;
    match fujiki_extract(&model) {
        Ok(q) => {
            let mut value = wire::quadratic_form_to_value(&q);
            if let Some((minuses, pluses, zeros)) = S::gram_signature(&q.gram) {
                value["signature"] = json!([minuses, pluses, zeros]);
            }
            write_output(output, &wire::to_output_string(&value))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(error) => {
            eprintln!("extraction failed: {error}");
            Ok(ExitCode::from(1))
        }
    }
}

// ---------------------------------------------------------------------------
// Plumbing
// ---------------------------------------------------------------------------

fn verdict_code(affirmative: bool) -> ExitCode {
    if affirmative {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Read {
                path: "standard input".to_string(),
                source,
            })?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_string(),
            source,
        })
    }
}

fn write_output(path: &str, text: &str) -> Result<(), CliError> {
    if path == "-" {
        io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write {
                path: "standard output".to_string(),
                source,
            })
    } else {
        fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_string(),
            source,
        })
    }
}

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use syzcover::field::DEFAULT_SCAN_CAP;
use syzcover::report::{render, run_verification, to_json, CheckSelection, CoverReport, ReportFormat};

#[derive(Parser)]
#[command(name = "syzcover", version, about = "Verify the trivialising étale cover of Syz(u², v², w²)(3) on Fermat curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification pipeline and emit a report.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Odd prime to verify.
    #[arg(long, required_unless_present = "primes", conflicts_with = "primes")]
    prime: Option<u64>,
    /// Comma-separated primes, verified in parallel.
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    /// Check groups: lemmas, cover, fiber, all.
    #[arg(long, default_value = "all")]
    checks: CheckSelection,
    /// Largest field the fiber census may scan.
    #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
    max_field_size: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// json or text.
    #[arg(long, default_value = "json")]
    format: ReportFormat,
    /// Treat skipped checks as failures.
    #[arg(long)]
    strict: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn render_all(reports: &[CoverReport], format: ReportFormat, batch: bool) -> String {
    match (format, batch) {
        (ReportFormat::Json, true) => {
            let parts: Vec<String> = reports.iter().map(|r| to_json(r).trim_end().to_string()).collect();
            format!("[\n{}\n]\n", parts.join(",\n"))
        }
        _ => reports.iter().map(|r| render(r, format)).collect::<Vec<_>>().join("\n"),
    }
}

fn verify(args: VerifyArgs) -> Result<bool, String> {
    let batch = args.prime.is_none();
    let primes = args.prime.map(|p| vec![p]).unwrap_or(args.primes);
    let mut reports = primes
        .par_iter()
        .map(|&p| run_verification(p, args.checks, args.seed, args.max_field_size))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    if args.strict {
        reports.iter_mut().for_each(CoverReport::make_strict);
    }
    let text = render_all(&reports, args.format, batch);
    let written = match &args.output {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            w.write_all(text.as_bytes())?;
            w.flush()
        }),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| format!("cannot write report: {e}"))?;
    Ok(reports.iter().all(CoverReport::passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => match verify(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}

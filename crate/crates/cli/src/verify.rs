use std::io::Write;

use clap::{Args, ValueEnum};
use debranges::verify::{run as run_suite, Report, Suite};
use serde::Serialize;

use crate::CliError;

/// Above this bound sweeps take noticeably longer than seconds.
const DEFAULT_N_MAX: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// all, lowner, theorem2, theorem3, gegenbauer, hypergeometric, gosper,
    /// positivity or askey-gasper.
    suite: String,
    /// Sweep bound; values above 30 can take minutes.
    #[arg(long = "n", default_value_t = DEFAULT_N_MAX as u32, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Debug, Serialize)]
struct JsonCheck<'a> {
    id: &'a str,
    indices: &'a [i64],
    pass: bool,
    witness: Option<&'a str>,
}

#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    n_max: usize,
    checks: Vec<JsonCheck<'a>>,
    pass: bool,
}

fn to_json(r: &Report) -> JsonReport<'_> {
    JsonReport {
        suite: &r.suite,
        n_max: r.n_max,
        checks: r
            .checks
            .iter()
            .map(|c| JsonCheck { id: &c.id, indices: &c.indices, pass: c.pass, witness: c.witness.as_deref() })
            .collect(),
        pass: r.pass(),
    }
}

fn write_text(out: &mut impl Write, r: &Report) -> std::io::Result<()> {
    for c in r.failures() {
        let idx: Vec<String> = c.indices.iter().map(i64::to_string).collect();
        writeln!(out, "FAIL {} [{}]: {}", c.id, idx.join(","), c.witness.as_deref().unwrap_or(""))?;
    }
    let failed = r.failures().count();
    writeln!(out, "suite {} (n_max = {}): {} checks, {} failed", r.suite, r.n_max, r.checks.len(), failed)?;
    writeln!(out, "{}", if r.pass() { "PASS" } else { "FAIL" })
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    let suite: Suite = args.suite.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    let n_max = args.n_max as usize;
    if n_max > DEFAULT_N_MAX {
        eprintln!("warning: --n {} is above {DEFAULT_N_MAX}; exact sweeps grow quickly and may take minutes", args.n_max);
    }
    let report = run_suite(suite, n_max);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        ReportFormat::Text => write_text(&mut out, &report)?,
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &to_json(&report))?;
            writeln!(out)?;
        }
    }
    if report.pass() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

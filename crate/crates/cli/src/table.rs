use std::io::Write;

use clap::{Args, ValueEnum};
use debranges::dbw::{debranges_tau, LambdaTable};
use debranges::lowner::ajn_recurrence;
use debranges::Rational;
use serde::Serialize;

use crate::render;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// `a_j^(n)`, columns n,j,coefficient.
    Lowner,
    /// `a_j^(n,k)`, columns n,k,j,coefficient.
    Lambda,
    /// Coefficients of `τ_k^n` in `y`, columns n,k,j,coefficient.
    Tau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    kind: TableKind,
    /// Largest n.
    #[arg(long = "n", default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Render values as binary64 instead of exact p/q.
    #[arg(long)]
    float: bool,
}

/// One table row; `k` is absent for the Löwner table.
#[derive(Debug, Serialize)]
struct Row {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    j: usize,
    coefficient: String,
}

#[derive(Debug, Serialize)]
struct JsonTable<'a> {
    table: &'a str,
    n_max: u32,
    rows: &'a [Row],
}

fn rows(kind: TableKind, n_max: usize, as_float: bool) -> Vec<Row> {
    let v = |r: &Rational| render::value(r, as_float);
    match kind {
        TableKind::Lowner => {
            ajn_recurrence(n_max).entries().map(|(n, j, a)| Row { n, k: None, j, coefficient: v(a) }).collect()
        }
        TableKind::Lambda => {
            LambdaTable::new(n_max).entries().map(|(n, k, j, a)| Row { n, k: Some(k), j, coefficient: v(a) }).collect()
        }
        TableKind::Tau => {
            let mut out = Vec::new();
            for n in 1..=n_max {
                for k in 1..=n {
                    let tau = debranges_tau(n, k).poly;
                    for j in k..=n {
                        out.push(Row { n, k: Some(k), j, coefficient: v(&tau.coeff(j)) });
                    }
                }
            }
            out
        }
    }
}

pub fn run(args: &TableArgs) -> Result<(), CliError> {
    let rows = rows(args.kind, args.n_max as usize, args.float);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut out);
            if args.kind == TableKind::Lowner {
                w.write_record(["n", "j", "coefficient"])?;
            } else {
                w.write_record(["n", "k", "j", "coefficient"])?;
            }
            for r in &rows {
                let mut rec = vec![r.n.to_string()];
                rec.extend(r.k.map(|k| k.to_string()));
                rec.push(r.j.to_string());
                rec.push(r.coefficient.clone());
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let name = args.kind.to_possible_value().expect("named").get_name().to_owned();
            serde_json::to_writer_pretty(&mut out, &JsonTable { table: &name, n_max: args.n_max, rows: &rows })?;
            writeln!(out)?;
        }
    }
    Ok(())
}

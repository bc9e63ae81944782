use clap::Args;
use debranges::hypsum::{gosper, parse_term, GosperError};
use debranges::Var;

use crate::render;
use crate::CliError;

#[derive(Debug, Args)]
pub struct GosperArgs {
    /// Term such as "(8-l)*binom(l+2,l-3)".
    term: String,
    /// Summation variable.
    #[arg(long, default_value = "l")]
    var: String,
    /// Inclusive summation range `a..b`; prints the telescoped sum.
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("range `{s}` is not of the form a..b");
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(format!("range `{s}` is empty"));
    }
    Ok((a, b))
}

pub fn run(args: &GosperArgs) -> Result<(), CliError> {
    let valid_var = args.var.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && args.var.chars().all(|c| c.is_alphanumeric() || c == '_')
        && args.var != "fact"
        && args.var != "binom";
    if !valid_var {
        return Err(CliError::Usage(format!("`{}` is not a valid variable name", args.var)));
    }
    let range = args.range.as_deref().map(parse_range).transpose().map_err(CliError::Usage)?;
    let var = Var::new(args.var.clone());
    let term = parse_term(&args.term, &var).map_err(|e| {
        let caret = format!("{}^", " ".repeat(e.column.saturating_sub(1)));
        CliError::Usage(format!("{e}\n  {}\n  {caret}", args.term))
    })?;
    let v = &args.var;
    match gosper(&term.ratio()) {
        Ok(cert) => {
            println!("r({v}) = {}", cert.ratio);
            println!("R({v}) = {}", cert.certificate);
            if let Some((a, b)) = range {
                let sum = cert.telescoped_sum(&term, a..=b).ok_or_else(|| {
                    CliError::Usage(format!("the antidifference has a pole at {v} = {} or {v} = {b}", a - 1))
                })?;
                println!("sum({v}={a}..{b}) = {}", render::exact(&sum));
            }
        }
        Err(GosperError::NotSummable) => println!("NOT GOSPER-SUMMABLE"),
        Err(e @ GosperError::ZeroRatio) => return Err(CliError::Usage(e.to_string())),
    }
    Ok(())
}

use clap::{ArgGroup, Args, ValueEnum};
use debranges::dbw::{debranges_tau, generating_fn, weinstein_poly, weinstein_series};
use debranges::lowner::a_poly;
use debranges::series::ZSeries;
use debranges::{Poly, Rational};
use num_traits::ToPrimitive;

use crate::render;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    /// `A_n`.
    #[value(name = "A")]
    A,
    /// `τ_k^n`.
    Tau,
    /// `Λ_k^n`.
    Lambda,
    /// Coefficients of `W_k(z, t)` up to `z^(n+1)`.
    #[value(name = "W-series")]
    WSeries,
    /// Coefficients of `B_k(z, t) = K(z) w^k` up to `z^(n+1)`.
    #[value(name = "B-series")]
    BSeries,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("point").required(true).args(["t", "y"])))]
pub struct EvalArgs {
    kind: EvalKind,
    #[arg(long = "n")]
    n: i64,
    #[arg(long = "k")]
    k: Option<i64>,
    /// Time, evaluated in binary64 through `y = e^(-t)`.
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
    /// Exact `y = e^(-t)`, as p/q, an integer or a decimal.
    #[arg(long, allow_negative_numbers = true)]
    y: Option<String>,
}

enum Point {
    Exact(Rational),
    Float(f64),
}

impl Point {
    fn eval(&self, p: &Poly) -> String {
        match self {
            Point::Exact(y) => render::exact(&p.eval(y)),
            Point::Float(y) => {
                let v = p.coeffs().iter().rev().fold(0.0, |acc, c| acc * y + c.to_f64().unwrap_or(f64::NAN));
                render::float(v)
            }
        }
    }
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn need_k(args: &EvalArgs) -> Result<i64, CliError> {
    args.k.ok_or_else(|| usage(format!("`eval {}` needs --k", name(args.kind))))
}

fn name(kind: EvalKind) -> String {
    kind.to_possible_value().expect("named").get_name().to_owned()
}

fn series_lines(s: &ZSeries, from: usize, point: &Point) -> Vec<String> {
    (from..=s.order()).map(|p| format!("z^{p}: {}", point.eval(s.coeff(p)))).collect()
}

pub fn run(args: &EvalArgs) -> Result<(), CliError> {
    let point = match (&args.y, args.t) {
        (Some(y), _) => Point::Exact(render::parse_rational(y).map_err(usage)?),
        (None, Some(t)) if t.is_finite() => Point::Float((-t).exp()),
        (None, Some(t)) => return Err(usage(format!("--t must be finite, got {t}"))),
        (None, None) => unreachable!("clap requires one of --t, --y"),
    };
    let n = args.n;
    let lines = match args.kind {
        EvalKind::A => {
            if n < 1 {
                return Err(usage(format!("A_n needs n >= 1, got n={n}")));
            }
            vec![point.eval(&a_poly(n as usize))]
        }
        EvalKind::Tau => {
            let k = need_k(args)?;
            if !(1 <= k && k <= n + 1) {
                return Err(usage(format!("tau needs 1 <= k <= n+1, got n={n}, k={k}")));
            }
            vec![point.eval(&debranges_tau(n as usize, k as usize).poly)]
        }
        EvalKind::Lambda => {
            let k = need_k(args)?;
            if !(1 <= k && k <= n) {
                return Err(usage(format!("lambda needs 1 <= k <= n, got n={n}, k={k}")));
            }
            vec![point.eval(&weinstein_poly(n as usize, k as usize))]
        }
        EvalKind::WSeries | EvalKind::BSeries => {
            let k = need_k(args)?;
            if !(1 <= k && k <= n) {
                return Err(usage(format!("{} needs 1 <= k <= n, got n={n}, k={k}", name(args.kind))));
            }
            let order = n as usize + 1;
            let s = if args.kind == EvalKind::WSeries {
                weinstein_series(k as usize, order)
            } else {
                generating_fn(k as usize, order)
            }
            .map_err(|e| usage(e.to_string()))?;
            series_lines(&s, k as usize + 1, &point)
        }
    };
    for line in lines {
        println!("{line}");
    }
    Ok(())
}

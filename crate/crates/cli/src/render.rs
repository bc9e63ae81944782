use debranges::Rational;
use num_traits::ToPrimitive;

/// `p/q`, or `p` when `q = 1`.
pub fn exact(r: &Rational) -> String {
    r.to_string()
}

/// Shortest `%.17g`-style rendering of a binary64 value.
pub fn float(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_owned()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}

pub fn value(r: &Rational, as_float: bool) -> String {
    if as_float {
        float(r.to_f64().unwrap_or(f64::NAN))
    } else {
        exact(r)
    }
}

/// Parses `p`, `-p`, `p/q` or a finite decimal such as `0.25` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a rational number (expected p, p/q or a decimal)");
    if let Some((p, q)) = s.split_once('/') {
        let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
        if q == num_bigint::BigInt::ZERO {
            return Err(format!("`{s}` has a zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: num_bigint::BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = num_bigint::BigInt::from(10).pow(frac.len() as u32);
        return Ok(Rational::new(digits, scale));
    }
    s.parse::<num_bigint::BigInt>().map(Rational::from_integer).map_err(|_| bad())
}

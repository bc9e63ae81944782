//! Gosper's algorithm for indefinite hypergeometric summation.
//!
//! For a term `b_l` with ratio `r(l) = b_{l+1}/b_l` the algorithm finds, when
//! one exists, a rational certificate `R` such that `s_l = R(l) b_l` satisfies
//! `s_l - s_{l-1} = b_l`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::term::HypTerm;
use crate::arith::{Poly, Rational, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperCertificate {
    /// `r(l) = b_{l+1} / b_l`.
    pub ratio: RationalFunction,
    /// `R(l)` with `s_l = R(l) b_l`.
    pub certificate: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GosperError {
    /// No hypergeometric antidifference exists.
    NotSummable,
    /// The ratio is identically zero.
    ZeroRatio,
}

impl fmt::Display for GosperError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GosperError::NotSummable => f.write_str("not Gosper-summable"),
            GosperError::ZeroRatio => f.write_str("term ratio is zero"),
        }
    }
}

impl core::error::Error for GosperError {}

/// Nonnegative integers `h` with `gcd(a(l), b(l+h)) != 1`, ascending.
fn dispersion_set(a: &Poly, b: &Poly) -> Vec<u64> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Vec::new();
    };
    if da == 0 || db == 0 {
        return Vec::new();
    }
    // Res_l(a(l), b(l+h)) is a polynomial in h of degree <= da*db
    let points: Vec<(Rational, Rational)> = (0..=da * db)
        .map(|h| {
            let h = Rational::from_integer(h.into());
            let res = a.resultant(&b.shift(&h)).expect("same variable");
            (h, res)
        })
        .collect();
    let res = Poly::interpolate(a.var().clone(), &points);
    res.integer_roots().into_iter().filter(|h| !h.is_negative()).filter_map(|h| h.to_u64()).collect()
}

/// Solves `p(l) x(l+1) - q(l) x(l) = c(l)` for a polynomial `x`, setting free
/// unknowns to zero.
fn solve_polynomial(p: &Poly, q: &Poly, c: &Poly) -> Option<Poly> {
    let var = p.var().clone();
    let plus = p + q;
    let minus = p - q;
    let deg_c = c.degree()? as i64;
    let d_plus = plus.degree().map_or(-1, |d| d as i64);
    let d_minus = minus.degree().map_or(-1, |d| d as i64);
    let bound = if d_plus <= d_minus {
        deg_c - d_minus
    } else {
        let lc = plus.leading().expect("nonzero");
        let l0 = -Rational::from_integer(2.into()) * minus.coeff((d_plus - 1) as usize) / lc;
        let from_c = deg_c - d_plus + 1;
        match l0.is_integer().then(|| l0.to_integer().to_i64()).flatten() {
            Some(v) if v >= 0 => from_c.max(v),
            _ => from_c,
        }
    };
    if bound < 0 {
        return None;
    }
    let n_unknowns = bound as usize + 1;
    // column i holds the contribution of x_i * l^i
    let columns: Vec<Poly> = (0..n_unknowns)
        .map(|i| {
            let m = Poly::monomial(var.clone(), Rational::one(), i);
            &(p * &m.shift_by_one()) - &(q * &m)
        })
        .collect();
    let rows = columns.iter().filter_map(Poly::degree).chain(c.degree()).max().unwrap_or(0) + 1;
    let mut mat: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|col| col.coeff(r)).collect();
            row.push(c.coeff(r));
            row
        })
        .collect();
    let x = solve_linear(&mut mat, n_unknowns)?;
    Some(Poly::new(var, x))
}

/// Gauss-Jordan elimination on an augmented matrix; free unknowns are zero.
fn solve_linear(mat: &mut [Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pr);
        let inv = mat[row][col].recip();
        for v in mat[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..mat.len() {
            if r != row && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for k in col..=n {
                    let sub = &f * &mat[row][k];
                    mat[r][k] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if mat[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = mat[r][n].clone();
    }
    Some(x)
}

/// Runs Gosper's algorithm on the term ratio `r(l) = b_{l+1}/b_l`.
pub fn gosper(r: &RationalFunction) -> Result<GosperCertificate, GosperError> {
    if r.is_zero() {
        return Err(GosperError::ZeroRatio);
    }
    let var = r.var().clone();
    let mut a = r.num().clone();
    let mut b = r.den().clone();
    let mut c = Poly::one(var.clone());
    for h in dispersion_set(&a, &b) {
        let hr = Rational::from_integer(h.into());
        let s = a.gcd(&b.shift(&hr)).expect("same variable");
        if s.is_constant() {
            continue;
        }
        a = a.exact_div(&s).expect("gcd divides");
        b = b.exact_div(&s.shift(&-&hr)).expect("gcd divides");
        for i in 1..=h {
            c = &c * &s.shift(&-Rational::from_integer(i.into()));
        }
    }
    let q = b.shift(&-Rational::one());
    let x = solve_polynomial(&a, &q, &c).ok_or(GosperError::NotSummable)?;
    if x.is_zero() {
        return Err(GosperError::NotSummable);
    }
    let certificate = RationalFunction::new(&a * &x.shift_by_one(), c).expect("nonzero c");
    Ok(GosperCertificate { ratio: r.clone(), certificate })
}

impl GosperCertificate {
    /// `R(l) - R(l-1)/r(l-1) == 1` as rational functions.
    pub fn identity_holds(&self) -> bool {
        let m1 = -Rational::one();
        let prev = self.certificate.shift(&m1);
        let Ok(step) = prev.checked_div(&self.ratio.shift(&m1)) else {
            return false;
        };
        (&self.certificate - &step).is_one()
    }

    /// `s_l = R(l) b_l`, or `None` at a pole of the certificate or the term.
    pub fn antidifference(&self, term: &HypTerm, l: i64) -> Option<Rational> {
        let b = term.eval(l)?;
        let r = self.certificate.eval(&Rational::from_integer(l.into()))?;
        Some(r * b)
    }

    /// `Σ_{l=lo..=hi} b_l = s_hi - s_{lo-1}`.
    pub fn telescoped_sum(&self, term: &HypTerm, range: RangeInclusive<i64>) -> Option<Rational> {
        if range.is_empty() {
            return Some(Rational::zero());
        }
        Some(self.antidifference(term, *range.end())? - self.antidifference(term, range.start() - 1)?)
    }
}

/// True iff the symbolic identity holds and `s_l - s_{l-1} = b_l` exactly for
/// every `l` in the range.
pub fn verify_certificate(term: &HypTerm, cert: &GosperCertificate, range: RangeInclusive<i64>) -> bool {
    if cert.ratio != term.ratio() || !cert.identity_holds() {
        return false;
    }
    let mut prev = None;
    for l in (range.start() - 1)..=*range.end() {
        let cur = cert.antidifference(term, l);
        if l >= *range.start() {
            match (&prev, &cur, term.eval(l)) {
                (Some(p), Some(c), Some(b)) if c - p == b => {}
                _ => return false,
            }
        }
        prev = cur;
    }
    true
}

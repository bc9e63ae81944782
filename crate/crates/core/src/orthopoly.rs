//! Gegenbauer polynomials `C_n^(-1/2)` and Jacobi polynomials `P_n^(α,0)`.
//!
//! Both live in the variable `x`, tied to the chain variable by
//! `x = 1 - 2y`, i.e. `y = (1-x)/2`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_rational, pochhammer, Poly, Rational, RationalExt, Var};
use crate::lowner::a_poly;
use crate::series::YPoly;

/// Polynomial in `x = 1 - 2y`.
pub type XPoly = Poly;

/// Substitutes `x = 1 - 2y`.
pub fn x_to_y(p: &XPoly) -> YPoly {
    p.compose(&Poly::from_ints(Var::Y, &[1, -2]))
}

/// Substitutes `y = (1 - x)/2`.
pub fn y_to_x(p: &YPoly) -> XPoly {
    let half = Rational::new(1.into(), 2.into());
    p.compose(&Poly::new(Var::X, alloc::vec![half.clone(), -half]))
}

/// `C_n^(-1/2)(x)`, the coefficient of `z^n` in `sqrt(1 - 2xz + z^2)`.
///
/// Expanding `sqrt(1 + u)` with `u = z (z - 2x)` binomially, the `z^n`
/// coefficient collects `C(1/2, m) C(m, n-m) (-2x)^(2m-n)` over
/// `ceil(n/2) <= m <= n`.
pub fn gegenbauer_m12(n: usize) -> XPoly {
    let half = Rational::new(1.into(), 2.into());
    let mut coeffs = alloc::vec![Rational::zero(); n + 1];
    for m in n.div_ceil(2)..=n {
        let p = 2 * m - n;
        let c = binomial_rational(&half, m as u32)
            * Rational::from_integer(binomial(m as i64, (n - m) as i64))
            * Rational::from_integer(num_bigint::BigInt::from(-2).pow(p as u32));
        coeffs[p] += c;
    }
    Poly::new(Var::X, coeffs)
}

/// `2 Σ_{j=0}^{n-1} (1-n)_j (n)_j / (j! (2)_j) ((1-x)/2)^(j+1)`, the
/// expansion of `C_n^(-1/2)` about `x = 1`. Agrees with [`gegenbauer_m12`]
/// only for `n >= 2`.
pub fn gegenbauer_x1_expansion(n: usize) -> XPoly {
    let half_one_minus_x = y_to_x(&Poly::identity(Var::Y));
    let (a, b, two) = (Rational::from_integer((1 - n as i64).into()), Rational::from_integer(n.into()), Rational::from_integer(2.into()));
    let mut acc = Poly::zero(Var::X);
    let mut power = half_one_minus_x.clone();
    let mut j_fact = Rational::one();
    for j in 0..n as u32 {
        if j > 0 {
            j_fact *= Rational::from_integer(j.into());
        }
        let c = pochhammer(&a, j) * pochhammer(&b, j) / (&j_fact * pochhammer(&two, j));
        acc = &acc + &power.scale(&c);
        power = &power * &half_one_minus_x;
    }
    acc.scale(&two)
}

pub fn gegenbauer_x1_expansion_check(n: usize) -> bool {
    gegenbauer_x1_expansion(n) == gegenbauer_m12(n)
}

/// `(C_{n+1}^(-1/2) - C_n^(-1/2)) / (x - 1)` rewritten in `y`, or `None` when
/// the division is not exact (as at `n = 1`).
pub fn gegenbauer_difference(n: usize) -> Option<YPoly> {
    let diff = &gegenbauer_m12(n + 1) - &gegenbauer_m12(n);
    let q = diff.exact_div(&Poly::from_ints(Var::X, &[-1, 1])).ok()?;
    Some(x_to_y(&q))
}

/// Whether the Gegenbauer difference reproduces `A_n`.
pub fn gegenbauer_difference_check(n: usize) -> bool {
    n >= 1 && gegenbauer_difference(n).is_some_and(|p| p == a_poly(n))
}

/// Three-term recurrence for `P_n^(α,0)`, `n >= 2`:
/// `lead P_n = (slope x + offset) P_{n-1} - back P_{n-2}`.
struct JacobiStep {
    lead: Rational,
    slope: Rational,
    offset: Rational,
    back: Rational,
}

fn jacobi_step(n: usize, alpha: &Rational) -> JacobiStep {
    let n = Rational::from_integer(n.into());
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let s = &two * &n + alpha; // 2n + α
    let lead = &two * &n * (&n + alpha) * (&s - &two);
    assert!(!lead.is_zero(), "Jacobi recurrence degenerates for α = {alpha}");
    JacobiStep {
        slope: (&s - &one) * &s * (&s - &two),
        offset: (&s - &one) * alpha * alpha,
        back: &two * (&n + alpha - &one) * (&n - &one) * &s,
        lead,
    }
}

/// `P_1^(α,0)(x) = (α+1) + (α+2)(x-1)/2` as `(constant, slope)`.
fn jacobi_first(alpha: &Rational) -> (Rational, Rational) {
    let two = Rational::from_integer(2.into());
    let slope = (alpha + &two) / &two;
    (alpha + Rational::one() - &slope, slope)
}

/// `P_n^(α,0)(x)` by the three-term recurrence.
///
/// # Panics
///
/// If the recurrence divides by zero, which needs `α` to be a negative
/// integer.
pub fn jacobi(n: usize, alpha: &Rational, x: &Rational) -> Rational {
    jacobi_values(n, alpha, x).pop().expect("n + 1 values")
}

/// `P_0 .. P_n` at `x`.
pub fn jacobi_values(n: usize, alpha: &Rational, x: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    if n == 0 {
        return out;
    }
    let (c0, c1) = jacobi_first(alpha);
    out.push(c0 + c1 * x);
    for m in 2..=n {
        let st = jacobi_step(m, alpha);
        let next = ((st.slope * x + st.offset) * &out[m - 1] - st.back * &out[m - 2]) / st.lead;
        out.push(next);
    }
    out
}

/// `P_n^(α,0)` as a polynomial in `x`.
pub fn jacobi_poly(n: usize, alpha: &Rational) -> XPoly {
    let mut prev = Poly::one(Var::X);
    if n == 0 {
        return prev;
    }
    let (c0, c1) = jacobi_first(alpha);
    let mut cur = Poly::new(Var::X, alloc::vec![c0, c1]);
    for m in 2..=n {
        let st = jacobi_step(m, alpha);
        let factor = Poly::new(Var::X, alloc::vec![st.offset, st.slope]);
        let next = (&(&factor * &cur) - &prev.scale(&st.back)).scale(&st.lead.recip());
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `Σ_{j=0}^{n} P_j^(2k,0)(x)`.
pub fn askey_gasper_sum(n: usize, k: usize, x: &Rational) -> Rational {
    let alpha = Rational::from_integer((2 * k).into());
    jacobi_values(n, &alpha, x).into_iter().fold(Rational::zero(), |acc, v| acc + v)
}

/// `z^n` coefficients, `n = 0 ..= order`, of `sqrt(1 - 2xz + z^2)/(1 - z)`,
/// i.e. partial sums `Σ_{j<=n} C_j^(-1/2)(x)`.
pub fn theorem_d_coefficients(order: usize, x: &Rational) -> Vec<Rational> {
    let mut acc = Rational::zero();
    (0..=order)
        .map(|n| {
            acc += gegenbauer_m12(n).eval(x);
            acc.clone()
        })
        .collect()
}

/// A negative value found by a positivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignViolation {
    pub n: usize,
    /// Jacobi parameter index (`α = 2k`); `None` for the Gegenbauer scan.
    pub k: Option<usize>,
    pub x: Rational,
    pub value: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub evaluated: usize,
    pub violations: Vec<SignViolation>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Signs of the Taylor coefficients of `sqrt(1 - 2xz + z^2)/(1 - z)` up to
/// `z^order` on a grid of `x` values.
pub fn theorem_d_coeff_scan(order: usize, x_grid: &[Rational]) -> ScanReport {
    let gegenbauer: Vec<XPoly> = (0..=order).map(gegenbauer_m12).collect();
    let mut report = ScanReport::default();
    for x in x_grid {
        let mut acc = Rational::zero();
        for (n, c) in gegenbauer.iter().enumerate() {
            acc += c.eval(x);
            report.evaluated += 1;
            if !acc.is_nonneg() {
                report.violations.push(SignViolation { n, k: None, x: x.clone(), value: acc.clone() });
            }
        }
    }
    report
}

/// Signs of `Σ_{j<=n} P_j^(2k,0)(x)` for `n <= n_max`, `1 <= k <= k_max`.
pub fn askey_gasper_scan(n_max: usize, k_max: usize, x_grid: &[Rational]) -> ScanReport {
    let mut report = ScanReport::default();
    for k in 1..=k_max {
        let alpha = Rational::from_integer((2 * k).into());
        for x in x_grid {
            let mut acc = Rational::zero();
            for (n, v) in jacobi_values(n_max, &alpha, x).into_iter().enumerate() {
                acc += v;
                report.evaluated += 1;
                if !acc.is_nonneg() {
                    report.violations.push(SignViolation { n, k: Some(k), x: x.clone(), value: acc.clone() });
                }
            }
        }
    }
    report
}

/// `points` equally spaced rationals from `lo` to `hi` inclusive.
pub fn uniform_grid(lo: &Rational, hi: &Rational, points: usize) -> Vec<Rational> {
    match points {
        0 => Vec::new(),
        1 => alloc::vec![lo.clone()],
        _ => {
            let step = (hi - lo) / Rational::from_integer((points - 1).into());
            (0..points).map(|i| lo + &step * Rational::from_integer(i.into())).collect()
        }
    }
}
